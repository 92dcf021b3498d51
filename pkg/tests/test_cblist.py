import numpy as np
import pytest

from cbgraph.cblist import (CBList, CHUNK, INSERTED, LEAF, UPDATED,
                            BlockAllocator, IdMap)
from cbgraph.cblist import bplus_tree
from cbgraph.errors import DuplicateExternalId, UnknownVertex

from .conftest import SMALL_BLOCKS, adjacency, build_graph


def test_allocator_geometry():
    allocator = BlockAllocator(64, 1, 1)
    assert allocator.chunk_capacity == 4
    assert allocator.leaf_capacity == 4
    assert allocator.fanout == 4

    default = BlockAllocator(64, 4, 4)
    assert default.chunk_capacity == 16
    assert default.fanout == 16
    for block in (default.new_chunk(0), default.new_leaf(0),
                  default.new_internal(0)):
        assert block.nbytes % 64 == 0


def test_allocator_rejects_bad_geometry():
    with pytest.raises(ValueError):
        BlockAllocator(60, 1, 1)
    with pytest.raises(ValueError):
        BlockAllocator(64, 0, 1)
    with pytest.raises(ValueError):
        BlockAllocator(64, 1, 1, property_mode='soa')


def test_neighbors_sorted_with_props(small_graph):
    assert list(small_graph.neighbors(0)) == [(d, float(d))
                                              for d in range(1, 11)]
    assert [e.dst for e in small_graph.neighbors(1)] == [2, 3]
    assert list(small_graph.neighbors(6)) == []


def test_chunk_promotion_on_overflow():
    graph = build_graph(6, [(0, d) for d in (4, 2, 3, 1)])
    record = graph.record(0)
    assert record.level == 0
    assert record.traversal_link.kind == CHUNK
    assert graph.chain_stats()['chunks'] == 1

    assert graph.insert_edge(0, 5, 2.0) == INSERTED
    record = graph.record(0)
    assert record.level == 2
    assert record.query_link is not None
    assert record.traversal_link.kind == LEAF
    assert record.tail_link is record.traversal_link.next
    stats = graph.chain_stats()
    assert stats['chunks'] == 0
    assert stats['leaves'] == 2
    assert [e.dst for e in graph.neighbors(0)] == [1, 2, 3, 4, 5]
    assert graph.gtchain_audit().ordered


def test_forced_promotion_keeps_records():
    graph = build_graph(4, [(1, 3, 0.5), (1, 2, 0.25)])
    before = list(graph.neighbors(1))
    graph.promote_to_tree(1)
    assert graph.record(1).level == 1
    assert list(graph.neighbors(1)) == before
    assert graph.find_edge(1, 3) == (3, 0.5)
    assert graph.gtchain_audit().ordered


def test_upsert_overwrites_property(small_graph):
    degree = small_graph.record(0).degree
    assert small_graph.insert_edge(0, 7, 70.0) == UPDATED
    assert small_graph.record(0).degree == degree
    assert small_graph.find_edge(0, 7).prop == 70.0
    assert small_graph.insert_edge(1, 2, 9.0) == UPDATED
    assert small_graph.find_edge(1, 2).prop == 9.0


def test_audit_and_level_law(random_graph):
    audit = random_graph.gtchain_audit()
    assert audit.ordered, audit.problems
    assert audit.edge_count == random_graph.edge_count == 400
    assert audit.block_count == random_graph.block_count
    for v in random_graph.vertices():
        record = random_graph.record(v)
        blocks = list(random_graph.vertex_blocks(v))
        if record.traversal_link is None:
            assert record.degree == 0
            continue
        assert len(blocks) == max(record.level, 1)
        assert blocks[-1] is record.tail_link
        if record.level > 0:
            assert bplus_tree.height(record.query_link) >= 1


def test_chain_is_ordered_by_owner_then_destination(random_graph):
    triples = list(random_graph.iter_edges())
    keys = [(src, dst) for src, dst, _ in triples]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_delete_edges_rebalances_tree(small_graph):
    rng = np.random.default_rng(0)
    remaining = list(range(1, 11))
    first = small_graph.record(0).traversal_link
    for dst in rng.permutation(remaining).tolist():
        assert small_graph.delete_edge(0, dst)
        remaining.remove(dst)
        assert [e.dst for e in small_graph.neighbors(0)] == remaining
        audit = small_graph.gtchain_audit()
        assert audit.ordered, audit.problems
        # the first leaf is never freed
        assert small_graph.record(0).traversal_link is first
    record = small_graph.record(0)
    assert record.degree == 0
    assert record.level == 1
    assert small_graph.delete_edge(0, 3) is False


def test_delete_and_reinsert_random(random_graph):
    rng = np.random.default_rng(7)
    expected = {(s, d): p for s, d, p in random_graph.iter_edges()}
    edges = list(expected)
    for i in rng.permutation(len(edges))[:250].tolist():
        src, dst = edges[i]
        assert random_graph.delete_edge(src, dst)
        del expected[(src, dst)]
    for src, dst in [(1, 2), (2, 1), (5, 40), (59, 0)]:
        random_graph.insert_edge(src, dst, 3.0)
        expected[(src, dst)] = 3.0
    assert {(s, d): p for s, d, p in random_graph.iter_edges()} == expected
    assert random_graph.gtchain_audit().ordered


def test_delete_vertex_leaves_dangling_records_hidden(small_graph):
    small_graph.delete_vertex(3)
    assert not small_graph.is_live(3)
    assert 3 not in small_graph.vertices()
    assert [e.dst for e in small_graph.neighbors(1)] == [2]
    assert [e.dst for e in small_graph.neighbors(1,
                                                 include_dangling=True)] == \
        [2, 3]
    assert small_graph.out_degree(1) == 1
    assert all(3 not in (s, d) for s, d, _ in small_graph.iter_edges())
    assert small_graph.gtchain_audit().ordered
    with pytest.raises(UnknownVertex):
        small_graph.insert_edge(0, 3)
    with pytest.raises(UnknownVertex):
        small_graph.record(3)


def test_find_edge_skips_deleted_destination(small_graph):
    assert small_graph.find_edge(1, 3) == (3, 2.0)
    assert small_graph.find_edge(0, 7) == (7, 7.0)
    small_graph.delete_vertex(3)
    small_graph.delete_vertex(7)
    assert small_graph.find_edge(1, 3) is None
    assert small_graph.find_edge(0, 7) is None
    assert small_graph.find_edge(1, 2) == (2, 1.0)
    # the stored records are still there
    assert small_graph.record(1).degree == 2


def test_read_vertex_of_deleted_vertex(small_graph):
    small_graph.update_vertex_prop(3, {'name': 'c'})
    small_graph.delete_vertex(3)
    record = small_graph.read_vertex(3)
    assert record.delete_flag is True
    assert record.props == {'name': 'c'}
    assert record.degree == 0 and record.traversal_link is None
    record.props['name'] = 'd'
    assert small_graph.read_vertex(3).props == {'name': 'c'}
    assert small_graph.read_vertex(2).delete_flag is False
    with pytest.raises(UnknownVertex):
        small_graph.read_vertex(99)
    with pytest.raises(UnknownVertex):
        small_graph.read_vertex(-1)


def test_delete_tree_vertex_frees_blocks(small_graph):
    before = small_graph.allocator.live_bytes
    small_graph.delete_vertex(0)
    assert small_graph.allocator.live_bytes < before
    assert small_graph.chain_head.owner == 1
    assert small_graph.gtchain_audit().ordered


def test_insert_first_edge_splices_into_chain():
    graph = build_graph(5, [(0, 1), (4, 1)])
    graph.insert_edge(2, 3)
    assert [block.owner for block in graph.iter_chain()] == [0, 2, 4]
    graph.insert_edge(1, 0)
    assert [block.owner for block in graph.iter_chain()] == [0, 1, 2, 4]


def test_vertex_properties():
    graph = CBList(**SMALL_BLOCKS)
    v = graph.insert_vertex('alice', {'age': 30})
    graph.update_vertex_prop(v, {'city': 'Oslo'})
    copy = graph.read_vertex(v)
    assert copy.props == {'age': 30, 'city': 'Oslo'}
    copy.props['age'] = 31
    assert graph.record(v).props['age'] == 30


def test_update_edge_prop_only_touches_existing(small_graph):
    assert small_graph.update_edge_prop(2, 3, 4.5)
    assert small_graph.find_edge(2, 3).prop == 4.5
    assert not small_graph.update_edge_prop(2, 5, 1.0)
    assert small_graph.find_edge(2, 5) is None


@pytest.mark.parametrize('mode', ['aoe', 'aoa'])
def test_property_modes_store_the_same_graph(mode):
    edges = [(0, d, d / 2.0) for d in range(1, 9)] + [(3, 1, 1.0)]
    graph = build_graph(9, edges, property_mode=mode)
    assert graph.property_mode == mode
    assert adjacency(graph)[0] == [(d, d / 2.0) for d in range(1, 9)]
    assert graph.gtchain_audit().ordered


def test_id_map():
    ids = IdMap()
    live = set()
    a = ids.add('a', live.__contains__)
    live.add(a)
    assert ids.lookup('a') == a
    with pytest.raises(DuplicateExternalId):
        ids.add('a', live.__contains__)
    live.discard(a)
    b = ids.add('a', live.__contains__)
    assert b != a
    assert ids.lookup('a') == b
    assert ids.external(a) == 'a'
    with pytest.raises(UnknownVertex):
        ids.lookup('zed')


def test_lookup_external_ids():
    graph = CBList(**SMALL_BLOCKS)
    a = graph.insert_vertex('a')
    b = graph.insert_vertex('b')
    graph.insert_edge(a, b)
    assert graph.lookup('b') == b
    assert graph.external_id(a) == 'a'
    with pytest.raises(DuplicateExternalId):
        graph.insert_vertex('a')
    graph.delete_vertex(a)
    with pytest.raises(UnknownVertex):
        graph.lookup('a')
    assert graph.insert_vertex('a') == 2


def test_mutation_inside_scan_is_rejected(small_graph):
    with small_graph.reading():
        with pytest.raises(AssertionError):
            small_graph.insert_edge(1, 4)


def _leaf_depths(root):
    depths, stack = [], [(root, 1)]
    while stack:
        node, depth = stack.pop()
        if node.kind == LEAF:
            depths.append((node, depth))
        else:
            stack.extend((child, depth + 1) for child in node.children)
    return depths


@pytest.mark.parametrize('seed', [0, 1, 2])
def test_tree_stays_balanced_under_heavy_deletes(seed):
    rng = np.random.default_rng(seed)
    targets = rng.permutation(np.arange(1, 401)).tolist()
    graph = build_graph(401, [(0, d) for d in targets])
    remaining = set(targets)
    for step, dst in enumerate(rng.permutation(targets).tolist()[:390]):
        assert graph.delete_edge(0, dst)
        remaining.discard(dst)
        if step % 3 == 0 and step < 200:
            back = int(rng.integers(1, 401))
            graph.insert_edge(0, back)
            remaining.add(back)
        record = graph.record(0)
        assert bplus_tree.audit(record) == []
        leaves = _leaf_depths(record.query_link)
        assert len({depth for _, depth in leaves}) == 1
        assert len(leaves) == record.level
        if len(leaves) > 1:
            assert min(leaf.count for leaf, _ in leaves) >= 2
    assert [e.dst for e in graph.neighbors(0)] == sorted(remaining)
    assert graph.gtchain_audit().ordered


def test_audit_reports_a_broken_tree(small_graph):
    record = small_graph.record(0)
    leaf = record.traversal_link
    leaf.remove_at(0)
    leaf.remove_at(0)
    problems = small_graph.gtchain_audit().problems
    assert any('under half full' in problem for problem in problems)
    assert bplus_tree.audit(record)


@pytest.mark.slow
def test_random_operations_match_a_dict_of_edges():
    rng = np.random.default_rng(11)
    graph = CBList(**SMALL_BLOCKS)
    stored, live, next_id = {}, [], 0
    for _ in range(300):
        stored[graph.insert_vertex(next_id)] = {}
        next_id += 1
    live = sorted(stored)

    def pick():
        # a few hubs grow deep trees
        if rng.random() < 0.3:
            return live[int(rng.integers(0, 5))]
        return live[int(rng.integers(0, len(live)))]

    for step in range(1, 100001):
        roll = rng.random()
        src = pick()
        if roll < 0.45:
            dst = pick()
            prop = float(rng.integers(1, 100))
            graph.insert_edge(src, dst, prop)
            stored[src][dst] = prop
        elif roll < 0.75:
            if stored[src] and rng.random() < 0.9:
                dst = list(stored[src])[int(rng.integers(0,
                                                         len(stored[src])))]
            else:
                dst = int(rng.integers(0, next_id))
            assert graph.delete_edge(src, dst) == (dst in stored[src])
            stored[src].pop(dst, None)
        elif roll < 0.85:
            dst = pick()
            prop = float(rng.integers(1, 100))
            assert graph.update_edge_prop(src, dst, prop) == \
                (dst in stored[src])
            if dst in stored[src]:
                stored[src][dst] = prop
        elif roll < 0.98:
            dst = int(rng.integers(0, next_id))
            expected = (dst, stored[src][dst]) \
                if dst in stored[src] and dst in stored else None
            assert graph.find_edge(src, dst) == expected
        elif roll < 0.99 and len(live) > 50:
            graph.delete_vertex(src)
            del stored[src]
            live = sorted(stored)
        else:
            v = graph.insert_vertex('x{0}'.format(next_id))
            assert v == next_id
            stored[v] = {}
            next_id += 1
            live = sorted(stored)

        if step % 1000 == 0:
            audit = graph.gtchain_audit()
            assert audit.ordered, audit.problems
            assert graph.vertices() == live
            for v in live:
                assert list(graph.neighbors(v)) == \
                    [(d, p) for d, p in sorted(stored[v].items())
                     if d in stored]
                assert graph.record(v).degree == len(stored[v])
