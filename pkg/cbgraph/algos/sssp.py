import numpy as np

from cbgraph.engine.frontier import Frontier
from cbgraph.engine.process import process_edge
from cbgraph.errors import NegativeWeight, TaskPanicked, UnknownVertex


def sssp(graph, source, config=None):
    """
    Single-source shortest paths over non-negative edge weights

    Frontier-based Bellman-Ford: every round relaxes the out-edges of the
    vertices whose distance improved in the previous round.

    Parameters
    ----------
    graph: CBList
        Graph whose edge properties are the weights.
    source: int
        Logical id of the start vertex.
    config: StrategyConfig, optional
        Execution configuration.

    Returns
    ----------
    numpy.ndarray
        float64 distance per logical id; ``inf`` when unreachable.

    Raises
    ----------
    NegativeWeight
        When a relaxed edge carries a negative weight.
    """
    if not graph.is_live(source):
        raise UnknownVertex(source)
    distance = np.full(graph.vertex_count, np.inf)
    distance[source] = 0.0
    frontier = Frontier(graph.vertex_count, [source])

    def relax(src, dst, weight, acc):
        if weight < 0:
            raise NegativeWeight(src, dst, weight)
        acc.push(dst, distance[src] + weight)

    while frontier:
        try:
            step = process_edge(graph, relax, active=frontier,
                                values=distance, reduce='min', config=config)
        except TaskPanicked as panic:
            if isinstance(panic.error, NegativeWeight):
                raise panic.error from None
            raise
        distance = step['values']
        frontier = step['frontier']
    return distance
