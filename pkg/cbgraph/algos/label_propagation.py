from collections import Counter

import numpy as np

from cbgraph.engine.process import process_edge


def label_propagation(graph, iters=10, config=None):
    """
    Synchronous label propagation for community detection

    Each round, every vertex adopts the most frequent label among itself
    and its in-neighbours, ties going to the smallest label.

    Parameters
    ----------
    graph: CBList
        Graph to label.
    iters: int
        Number of rounds (default 10)
    config: StrategyConfig, optional
        Execution configuration.

    Returns
    ----------
    numpy.ndarray
        int64 label per logical id; deleted vertices hold -1.
    """
    size = graph.vertex_count
    labels = np.arange(size, dtype=np.int64)
    live = np.zeros(size, dtype=bool)
    live[graph.vertices()] = True
    labels[~live] = -1

    def offer(src, dst, prop, acc):
        acc.push(dst, int(labels[src]))

    for _ in range(iters):
        step = process_edge(graph, offer, reduce='collect', config=config,
                            mode='dense')
        updated = labels.copy()
        for v, offered in step['values'].items():
            votes = Counter(offered)
            votes[int(labels[v])] += 1
            best = max(votes.values())
            updated[v] = min(label for label, count in votes.items()
                             if count == best)
        if np.array_equal(updated, labels):
            break
        labels = updated
    return labels
