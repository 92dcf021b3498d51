import numpy as np
import pytest

from cbgraph.adapt import StrategyConfig, mode_config
from cbgraph.data.synthetic import random_edges
from cbgraph.engine import Frontier, process_edge, process_vertex

from .conftest import build_graph

CONFIGS = [
    mode_config('SE'),
    mode_config('IE+SP', tasks_per_thread=4),
    mode_config('HybridI', tasks_per_thread=3, scheduler='trimmed'),
    mode_config('HybridII', tasks_per_thread=2, threads=2,
                partitioner='vertex_range'),
]


def _in_degree(src, dst, prop, acc):
    acc.push(dst, 1)


def test_process_vertex_maps_live_vertices(small_graph):
    small_graph.delete_vertex(4)
    result = process_vertex(small_graph, small_graph.out_degree,
                            config=StrategyConfig(threads=3))
    assert list(result) == small_graph.vertices()
    assert result[0] == 9
    assert result[5] == 0

    subset = process_vertex(small_graph, lambda v: v * v, active=[1, 4, 9])
    assert subset == {1: 1, 9: 81}


@pytest.mark.parametrize('partitioner', ['gtchain', 'vertex_range'])
def test_more_tasks_than_blocks_or_vertices(partitioner):
    config = StrategyConfig(threads=2, tasks_per_thread=4,
                            partitioner=partitioner)
    graph = build_graph(3, [(0, 1), (1, 2)])
    result = process_edge(graph, _in_degree, reduce='add', config=config,
                          dtype=np.int64)
    assert result['values'].tolist() == [0, 1, 1]
    assert process_vertex(graph, lambda v: -v, config=config) == \
        {0: 0, 1: -1, 2: -2}

    empty = build_graph(0, [])
    assert process_vertex(empty, lambda v: v, config=config) == {}
    result = process_edge(empty, _in_degree, reduce='add', config=config,
                          dtype=np.int64)
    assert len(result['values']) == 0


@pytest.mark.parametrize('config', CONFIGS)
def test_dense_add_equals_in_degree(random_graph, config):
    result = process_edge(random_graph, _in_degree, reduce='add',
                          config=config, dtype=np.int64)
    expected = np.zeros(random_graph.vertex_count, dtype=np.int64)
    for _, dst, _ in random_graph.iter_edges():
        expected[dst] += 1
    assert result['mode'] == 'dense'
    assert np.array_equal(result['values'], expected)
    assert result['frontier'].to_list().tolist() == \
        np.flatnonzero(expected).tolist()
    assert result['counters'].records == random_graph.edge_count


def test_results_do_not_depend_on_the_strategy(random_graph):
    def relax(src, dst, prop, acc):
        acc.push(dst, prop + src)

    outputs = [process_edge(random_graph, relax, reduce='min',
                            config=config)['values'] for config in CONFIGS]
    for output in outputs[1:]:
        assert np.array_equal(output, outputs[0])


def test_sparse_pass_only_scans_active_sources(small_graph):
    values = np.full(small_graph.vertex_count, np.inf)
    values[1] = 0.0

    def relax(src, dst, prop, acc):
        acc.push(dst, values[src] + prop)

    result = process_edge(small_graph, relax, active=[1], values=values,
                          reduce='min',
                          config=StrategyConfig(dense_threshold=0.5))
    assert result['mode'] == 'sparse'
    assert result['values'][2] == 1.0
    assert result['values'][3] == 2.0
    assert sorted(result['frontier']) == [2, 3]
    assert result['counters'].records == 2


def test_auto_switches_to_dense_for_large_frontiers(small_graph):
    active = Frontier(small_graph.vertex_count, range(6))
    result = process_edge(small_graph, _in_degree, active=active,
                          reduce='add', dtype=np.int64,
                          config=StrategyConfig(dense_threshold=0.5))
    assert result['mode'] == 'dense'
    assert result['values'][3] == 3


def test_collect_gathers_pushes(small_graph):
    def offer(src, dst, prop, acc):
        acc.push(dst, src)

    result = process_edge(small_graph, offer, reduce='collect',
                          config=StrategyConfig(tasks_per_thread=3))
    assert sorted(result['values'][3]) == [0, 1, 2]
    assert result['values'][4] == [0, 5]


def test_rejects_unknown_reduction(small_graph):
    with pytest.raises(ValueError):
        process_edge(small_graph, _in_degree, reduce='max')


def test_frontier_conversions():
    frontier = Frontier(6, [4, 1])
    assert frontier.to_list().tolist() == [1, 4]
    assert list(frontier) == [1, 4]
    assert 4 in frontier and 2 not in frontier and 9 not in frontier
    assert len(frontier) == 2 and frontier
    assert frontier.density(8) == 0.25
    again = Frontier.from_mask(frontier.to_mask())
    assert again.to_list().tolist() == [1, 4]
    assert not Frontier(3)


def test_dense_and_sparse_agree():
    graph = build_graph(500, random_edges(500, 3000, seed=4))
    values = np.full(graph.vertex_count, np.inf)
    active = list(range(0, 500, 7))
    values[active] = 0.0

    def relax(src, dst, prop, acc):
        acc.push(dst, values[src] + prop)

    dense, sparse = (process_edge(graph, relax, active=active, values=values,
                                  reduce='min', mode=mode)
                     for mode in ('dense', 'sparse'))
    assert dense['mode'] == 'dense' and sparse['mode'] == 'sparse'
    assert np.array_equal(dense['values'], sparse['values'])
    assert dense['frontier'].to_list().tolist() == \
        sparse['frontier'].to_list().tolist()
