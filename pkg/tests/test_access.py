import math

import numpy as np
import pytest

from cbgraph.access import (AccessCounters, ExecutionContext, SubChain,
                            SuspendableTask, counter_scope, find_neighbor,
                            get_neighbors_chain, get_neighbors_vertex,
                            scan_vertices)
from cbgraph.adapt import StrategyConfig, mode_config
from cbgraph.engine import process_edge
from cbgraph.errors import InvalidSubChain, UnknownVertex

from .conftest import build_graph

STRATEGIES = ['all_soft', 'all_hard', 'hybrid_block_size', 'hybrid_hotness']


def _context(strategy, **options):
    return ExecutionContext(StrategyConfig(prefetch_strategy=strategy,
                                           **options))


def test_task_resumes_until_done():
    def steps():
        yield
        yield
        return 'finished'

    task = SuspendableTask(steps())
    assert task.resume() is True
    assert task.resume() is True
    assert task.resume() is False
    assert task.done and task.result == 'finished'
    assert task.resumes == 3 and task.suspensions == 2
    # no-op once finished
    assert task.resume() is False
    assert task.resumes == 3


def test_destroy_keeps_result():
    def steps():
        yield
        return 5

    task = SuspendableTask(steps())
    assert task.run() == 5
    task.destroy()
    assert task.result == 5


@pytest.mark.parametrize('strategy', STRATEGIES)
def test_vertex_scan_is_transparent(small_graph, strategy):
    expected = list(small_graph.neighbors(0))
    seen = []
    ctx = _context(strategy, hotness_prefix=1)
    task = get_neighbors_vertex(small_graph, 0,
                                lambda dst, prop: seen.append((dst, prop)),
                                ctx)
    assert task.run() == len(expected)
    assert seen == expected
    blocks = len(list(small_graph.vertex_blocks(0)))
    assert task.suspensions <= blocks
    assert ctx.counters.blocks == blocks
    assert ctx.counters.records == len(expected)


def test_suspension_counts_per_strategy(small_graph):
    blocks = len(list(small_graph.vertex_blocks(0)))
    assert blocks > 1

    def suspensions(strategy, vertex=0, **options):
        ctx = _context(strategy, **options)
        task = get_neighbors_vertex(small_graph, vertex,
                                    lambda dst, prop: None, ctx)
        task.run()
        return task.suspensions

    assert suspensions('all_soft') == blocks
    assert suspensions('all_hard') == 0
    # tree leaves are hinted, the chunk of vertex 1 is not
    assert suspensions('hybrid_block_size') == blocks
    assert suspensions('hybrid_block_size', vertex=1) == 0
    assert suspensions('hybrid_hotness', hotness_prefix=1) == 1
    assert suspensions('hybrid_hotness', hotness_prefix=0) == 0


def test_interleaving_without_hints():
    config = mode_config('IE')
    ctx = ExecutionContext(config)
    assert not config.software_prefetch
    assert ctx.before_block(type('B', (), {'kind': 'chunk'})(), 0)
    assert ctx.counters.hints == 0
    assert ctx.counters.yields == 1


def test_chain_scan_visits_every_live_edge(random_graph):
    expected = list(random_graph.iter_edges())
    seen = []
    sub = SubChain(random_graph.chain_head, None, random_graph.block_count)
    task = get_neighbors_chain(random_graph, sub,
                               lambda s, d, p: seen.append((s, d, p)))
    assert task.run() == len(expected)
    assert seen == expected
    assert task.suspensions == random_graph.block_count


def test_chain_scan_rejects_unreachable_end(small_graph):
    blocks = list(small_graph.iter_chain())
    sub = SubChain(blocks[2], blocks[1], 0)
    task = get_neighbors_chain(small_graph, sub, lambda s, d, p: None)
    with pytest.raises(InvalidSubChain):
        task.run()
    with pytest.raises(InvalidSubChain):
        get_neighbors_chain(small_graph, SubChain(None, blocks[0], 0),
                            lambda s, d, p: None)


def test_find_neighbor_in_tree_and_chunk(small_graph):
    task = find_neighbor(small_graph, 0, 7)
    assert task.run() == (7, 7.0)
    assert task.suspensions >= 2
    assert find_neighbor(small_graph, 0, 42).run() is None

    chunk_task = find_neighbor(small_graph, 1, 3)
    assert chunk_task.run() == (3, 2.0)
    assert chunk_task.suspensions == 0
    assert find_neighbor(small_graph, 6, 1).run() is None


@pytest.mark.parametrize('strategy', ['all_hard', 'all_soft'])
def test_find_neighbor_hides_deleted_destination(small_graph, strategy):
    small_graph.delete_vertex(3)
    small_graph.delete_vertex(7)
    assert find_neighbor(small_graph, 1, 3, _context(strategy)).run() is None
    assert find_neighbor(small_graph, 0, 7, _context(strategy)).run() is None
    assert find_neighbor(small_graph, 0, 8,
                         _context(strategy)).run() == (8, 8.0)


def test_find_neighbor_all_hard_never_suspends(small_graph):
    ctx = _context('all_hard')
    task = find_neighbor(small_graph, 0, 10, ctx)
    assert task.run() == (10, 10.0)
    assert task.suspensions == 0
    assert ctx.counters.node_visits >= 2


def test_find_neighbor_descent_is_logarithmic():
    degree = 3000
    rng = np.random.default_rng(4)
    targets = [int(d) for d in rng.permutation(np.arange(1, degree + 1))]
    graph = build_graph(degree + 1, [(0, d) for d in targets])
    bound = math.ceil(math.log(degree, 2)) + 2
    for dst in rng.integers(0, degree + 50, size=200):
        ctx = _context('all_soft')
        find_neighbor(graph, 0, int(dst), ctx).run()
        assert ctx.counters.node_visits <= bound


def test_unknown_vertices_fail_eagerly(small_graph):
    with pytest.raises(UnknownVertex):
        get_neighbors_vertex(small_graph, 99, lambda dst, prop: None)
    small_graph.delete_vertex(2)
    with pytest.raises(UnknownVertex):
        find_neighbor(small_graph, 2, 3)


def test_scan_vertices(small_graph):
    picked = []
    count = scan_vertices(small_graph, lambda v: v % 2 == 0, picked.append)
    assert count == len(picked) == 6
    assert picked == [0, 2, 4, 6, 8, 10]


def test_counters_merge():
    a = AccessCounters(hints=1, blocks=2)
    b = AccessCounters(hints=3, records=4)
    assert a.merge(b).to_dict()['hints'] == 4
    assert a.records == 4


def test_counter_scope_collects_runs(small_graph):
    with counter_scope() as scope:
        process_edge(small_graph, lambda s, d, p, acc: None, reduce='add')
    values = scope.to_dict()
    assert values['runs'] == 1
    assert values['records'] == small_graph.edge_count
