import numpy as np

from cbgraph.engine.process import process_edge


def connected_components(graph, config=None):
    """
    Weakly connected components by minimum-label propagation

    Every edge pushes the smaller label in both directions until no label
    changes.

    Parameters
    ----------
    graph: CBList
        Graph to label; edge direction is ignored.
    config: StrategyConfig, optional
        Execution configuration.

    Returns
    ----------
    numpy.ndarray
        int64 component label per logical id: the smallest logical id in
        the component. Deleted vertices hold -1.
    """
    size = graph.vertex_count
    labels = np.arange(size, dtype=np.int64)
    live = np.zeros(size, dtype=bool)
    live[graph.vertices()] = True

    def hook(src, dst, prop, acc):
        acc.push(dst, labels[src])
        acc.push(src, labels[dst])

    while True:
        step = process_edge(graph, hook, values=labels, reduce='min',
                            config=config, mode='dense')
        if not step['frontier']:
            break
        labels = step['values']
    labels[~live] = -1
    return labels
