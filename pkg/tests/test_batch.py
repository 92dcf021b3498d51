import pytest

from cbgraph.adapt import StrategyConfig, mode_config
from cbgraph.bench import generate_update_stream, graph_checksum
from cbgraph.engine import (UpdateOp, apply_update, batch_update,
                            group_by_source)
from cbgraph.engine.batch import (DELETE_EDGE, DELETE_VERTEX, INSERT_EDGE,
                                  INSERT_VERTEX, UPDATE_EDGE, UPDATE_VERTEX)
from cbgraph.errors import BatchOpError, UnknownVertex
from cbgraph.data.synthetic import random_edges

from .conftest import adjacency, build_graph

CONFIGS = [
    None,
    mode_config('SE'),
    mode_config('IE+SP', tasks_per_thread=4),
    mode_config('HybridII', tasks_per_thread=3, threads=2,
                scheduler='trimmed'),
]


def _pair():
    edges = random_edges(50, 300, seed=11)
    return build_graph(50, edges), build_graph(50, edges)


@pytest.mark.parametrize('config', CONFIGS)
@pytest.mark.parametrize('kind', ['edges', 'properties', 'vertices'])
def test_batch_equals_sequential(config, kind):
    batched, sequential = _pair()
    stream = generate_update_stream(sequential, 400, seed=5, kind=kind,
                                    delete_vertex_fraction=0.05)
    for op in stream:
        apply_update(sequential, op)
    stats = batch_update(batched, stream, config)

    assert stats.applied == len(stream)
    assert adjacency(batched) == adjacency(sequential)
    assert graph_checksum(batched) == graph_checksum(sequential)
    assert batched.gtchain_audit().ordered


def test_vertex_deletion_splits_epochs():
    graph = build_graph(4, [(0, 1), (1, 2)])
    batch = [UpdateOp(INSERT_EDGE, 2, 3, 1.0),
             UpdateOp(INSERT_EDGE, 0, 2, 1.0),
             UpdateOp(DELETE_VERTEX, 2),
             UpdateOp(INSERT_EDGE, 3, 0, 2.0)]
    stats = batch_update(graph, batch)
    assert stats.epochs == 3
    assert stats.applied == 4
    assert not graph.is_live(2)
    assert [e.dst for e in graph.neighbors(0)] == [1]
    assert [e.dst for e in graph.neighbors(3)] == [0]


def test_vertex_ops_run_before_edge_groups():
    graph = build_graph(2, [(0, 1)])
    batch = [UpdateOp(INSERT_EDGE, 0, 'new', 4.0),
             UpdateOp(INSERT_VERTEX, 'new', props={'kind': 'late'}),
             UpdateOp(UPDATE_VERTEX, 0, props={'seen': 1}),
             UpdateOp(UPDATE_EDGE, 0, 1, 9.0),
             UpdateOp(DELETE_EDGE, 0, 1)]
    batch_update(graph, batch)
    new = graph.lookup('new')
    assert list(graph.neighbors(0)) == [(new, 4.0)]
    assert graph.record(new).props == {'kind': 'late'}
    assert graph.record(0).props == {'seen': 1}


def test_failed_op_reports_its_batch_index():
    graph = build_graph(3, [(0, 1)])
    batch = [UpdateOp(INSERT_EDGE, 0, 2, 1.0),
             UpdateOp(INSERT_EDGE, 1, 2, 1.0),
             UpdateOp(INSERT_EDGE, 2, 'ghost', 1.0)]
    with pytest.raises(BatchOpError) as info:
        batch_update(graph, batch, StrategyConfig(tasks_per_thread=2))
    assert info.value.op_index == 2
    assert isinstance(info.value.error, UnknownVertex)


def test_failed_vertex_op_after_an_epoch():
    graph = build_graph(3, [(0, 1)])
    batch = [UpdateOp(INSERT_EDGE, 1, 2, 1.0),
             UpdateOp(DELETE_VERTEX, 'ghost')]
    with pytest.raises(BatchOpError) as info:
        batch_update(graph, batch)
    assert info.value.op_index == 1


def test_group_by_source_keeps_batch_order():
    batch = [UpdateOp(INSERT_EDGE, 1, 2), UpdateOp(INSERT_VERTEX, 9),
             UpdateOp(DELETE_EDGE, 1, 3), UpdateOp(INSERT_EDGE, 0, 1)]
    grouped = group_by_source(batch, offset=10)
    assert [index for index, _ in grouped.vertex_ops] == [11]
    assert [index for index, _ in grouped.groups[1]] == [10, 12]
    assert [index for index, _ in grouped.groups[0]] == [13]
    with pytest.raises(BatchOpError):
        group_by_source([UpdateOp('rename_vertex', 1)])


def test_update_counts_scheduler_work():
    graph = build_graph(10, [(v, (v + 1) % 10) for v in range(10)])
    batch = [UpdateOp(INSERT_EDGE, v, (v + 3) % 10, 1.0) for v in range(10)]
    stats = batch_update(graph, batch, StrategyConfig(tasks_per_thread=4,
                                                      scheduler='trimmed'))
    assert stats.scheduler.resumes >= 4
    assert stats.throughput > 0
    assert graph.edge_count == 20
