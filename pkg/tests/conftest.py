import networkx as nx
import pytest

from cbgraph.cblist import CBList
from cbgraph.data.synthetic import random_edges

# one cache line per block: chunks and leaves hold 4 records, fanout 4
SMALL_BLOCKS = dict(cache_line_size=64, chunk_lines=1, node_lines=1)


def build_graph(n_vertices, edges, **storage):
    """CBList over vertices 0..n-1 whose logical ids equal external ids."""
    options = dict(SMALL_BLOCKS)
    options.update(storage)
    graph = CBList(**options)
    for v in range(n_vertices):
        graph.insert_vertex(v)
    for edge in edges:
        src, dst = edge[0], edge[1]
        weight = edge[2] if len(edge) > 2 and edge[2] is not None else 1.0
        graph.insert_edge(src, dst, weight)
    return graph


def adjacency(graph):
    """Live adjacency as ``{src: [(dst, prop), ...]}`` sorted by dst."""
    return {v: list(graph.neighbors(v)) for v in graph.vertices()}


def to_networkx(graph):
    nx_graph = nx.DiGraph()
    nx_graph.add_nodes_from(graph.vertices())
    for src, dst, prop in graph.iter_edges():
        nx_graph.add_edge(src, dst, weight=prop)
    return nx_graph


@pytest.fixture
def small_graph():
    # vertex 0 overflows its chunk into a tree, the rest stay in chunks
    edges = [(0, d, float(d)) for d in range(1, 11)]
    edges += [(1, 2, 1.0), (1, 3, 2.0), (2, 3, 1.0), (3, 0, 5.0),
              (4, 5, 1.0), (5, 4, 1.0)]
    return build_graph(11, edges)


@pytest.fixture
def random_graph():
    edges = random_edges(60, 400, seed=3)
    return build_graph(60, edges)


@pytest.fixture
def edge_file(tmp_path):
    path = tmp_path / 'graph.txt'
    lines = ['# toy graph', '0 1 3', '0 2 1', '2 1 1', '1 3 2', '3 4 1',
             '4 0 7', '5 6 2']
    path.write_text('\n'.join(lines) + '\n')
    return str(path)
