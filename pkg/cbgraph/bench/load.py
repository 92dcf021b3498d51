import logging
import time
from dataclasses import asdict, dataclass

import numpy as np

from cbgraph.cblist.cblist import CBList
from cbgraph.global_settings import WEIGHT_RANGE
from cbgraph.io.io_graph import load_edge_list

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LoadStats:
    vertices: int
    edges: int
    seconds: float

    def to_dict(self):
        return asdict(self)


def load_graph(edge_list, shuffle_seed=None, weight_seed=0,
               allow_negative=False, return_stats=False, **storage):
    """
    Build a CBList from an edge-list file

    Parameters
    ----------
    edge_list: str
        Path to a ``src dst [weight]`` file (see load_edge_list).
    shuffle_seed: int, optional
        Shuffle vertex ids and the edge insertion order before loading, so
        neither logical ids nor insertion order carry locality from the
        source file (default keeps file order).
    weight_seed: int
        Seed for the integer weights drawn from WEIGHT_RANGE for lines
        without a weight. Weights are drawn in file order, so they do not
        depend on ``shuffle_seed``.
    allow_negative: bool
        Accept negative weights (default is False)
    return_stats: bool
        Also return the LoadStats of this load (default is False)
    storage:
        Keyword arguments for CBList (cache_line_size, chunk_lines,
        node_lines, property_mode).

    Returns
    ----------
    CBList or (CBList, LoadStats)
        The loaded graph; the same file and seeds give the same graph, and
        every shuffle seed gives the same adjacency over external ids.
    """
    logger.info("\nLoad graph %s", edge_list)
    start = time.perf_counter()
    parsed = load_edge_list(edge_list, allow_negative=allow_negative)

    rng = np.random.default_rng(weight_seed)
    # a repeated edge keeps its last weight in the file
    weights = {}
    for src, dst, weight in parsed['edges']:
        if weight is None:
            weight = float(rng.integers(WEIGHT_RANGE[0], WEIGHT_RANGE[1] + 1))
        weights.pop((src, dst), None)
        weights[(src, dst)] = weight
    edges = [(src, dst, weight) for (src, dst), weight in weights.items()]

    vertices = list(parsed['vertices'])
    if shuffle_seed is not None:
        shuffle = np.random.default_rng(shuffle_seed)
        vertices = [vertices[i] for i in shuffle.permutation(len(vertices))]
        edges = [edges[i] for i in shuffle.permutation(len(edges))]

    graph = CBList(**storage)
    for vertex in vertices:
        graph.insert_vertex(vertex)
    lookup = graph.id_map.forward
    for src, dst, weight in edges:
        graph.insert_edge(lookup[src], lookup[dst], weight)

    stats = LoadStats(graph.live_vertex_count, graph.edge_count,
                      time.perf_counter() - start)
    logger.info("Loaded %d vertices and %d edges in %.2fs", stats.vertices,
                stats.edges, stats.seconds)
    if return_stats:
        return graph, stats
    return graph
