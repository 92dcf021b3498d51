import logging

import numpy as np

from cbgraph.engine.frontier import Frontier
from cbgraph.engine.process import process_edge
from cbgraph.errors import UnknownVertex

logger = logging.getLogger(__name__)


def _push_level(src, dst, prop, acc, distance):
    acc.push(dst, distance[src] + 1.0)


def bfs(graph, source, config=None):
    """
    Breadth-first search hop distances

    Parameters
    ----------
    graph: CBList
        Graph to traverse along out-edges.
    source: int
        Logical id of the start vertex.
    config: StrategyConfig, optional
        Execution configuration; each level switches between sparse pushes
        from the frontier and a full GTChain scan.

    Returns
    ----------
    numpy.ndarray
        float64 hop distance per logical id; unreachable and deleted
        vertices hold ``inf``.
    """
    if not graph.is_live(source):
        raise UnknownVertex(source)
    distance = np.full(graph.vertex_count, np.inf)
    distance[source] = 0.0
    frontier = Frontier(graph.vertex_count, [source])
    levels = 0

    def push(src, dst, prop, acc):
        _push_level(src, dst, prop, acc, distance)

    while frontier:
        step = process_edge(graph, push, active=frontier, values=distance,
                            reduce='min', config=config)
        distance = step['values']
        frontier = step['frontier']
        levels += 1
    logger.debug("BFS from %d finished after %d levels", source, levels)
    return distance
