import logging

import numpy as np

from cbgraph.engine.process import process_edge, process_vertex
from cbgraph.global_settings import DEFAULT_DAMPING

logger = logging.getLogger(__name__)


def pagerank(graph, iters=20, damping=DEFAULT_DAMPING, config=None):
    """
    PageRank by synchronous power iteration

    Parameters
    ----------
    graph: CBList
        Graph to rank.
    iters: int
        Number of iterations (default 20)
    damping: float
        Damping factor (default 0.85)
    config: StrategyConfig, optional
        Execution configuration. Every iteration is a dense scan.

    Returns
    ----------
    numpy.ndarray
        float64 rank per logical id, summing to 1 over live vertices;
        deleted vertices hold 0.

    Notes
    ----------
    Rank held by vertices without live out-edges is spread uniformly over
    all live vertices, so the total is preserved.
    """
    size = graph.vertex_count
    live = np.zeros(size, dtype=bool)
    live[graph.vertices()] = True
    n_live = int(live.sum())
    rank = np.zeros(size)
    if n_live == 0:
        return rank
    rank[live] = 1.0 / n_live

    out_degree = np.zeros(size)
    for v, degree in process_vertex(graph, graph.out_degree,
                                    config=config).items():
        out_degree[v] = degree
    sinks = live & (out_degree == 0)
    share = np.zeros(size)

    def spread(src, dst, prop, acc):
        acc.push(dst, share[src])

    for iteration in range(iters):
        np.divide(rank, out_degree, out=share, where=out_degree > 0)
        step = process_edge(graph, spread, values=None, reduce='add',
                            config=config, mode='dense')
        base = (1.0 - damping + damping * rank[sinks].sum()) / n_live
        rank = np.where(live, base + damping * step['values'], 0.0)
        logger.debug("PageRank iteration %d, total %.12f", iteration,
                     rank.sum())
    return rank
