"""CBList: a vertex table whose neighbourhoods live in cache-line blocks.

Low-degree vertices keep their neighbours in one sorted small chunk; a
chunk that overflows is promoted to a B+ tree whose leaves replace it in
place. All chunks and leaves form the Global Traversal Chain (GTChain),
ordered by owning vertex and then by destination, so a full edge scan is a
single linked-list walk.
"""
import copy
import logging
import threading
from bisect import bisect_left
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, NamedTuple, Optional

import numpy as np

from cbgraph.cblist import bplus_tree
from cbgraph.cblist.blocks import BlockAllocator, CHUNK, LEAF, INTERNAL
from cbgraph.cblist.id_map import IdMap
from cbgraph.errors import UnknownVertex
from cbgraph.global_settings import (CACHE_LINE_SIZE, CHUNK_CACHE_LINES,
                                     NODE_CACHE_LINES, DEFAULT_PROPERTY_MODE)

logger = logging.getLogger(__name__)

INSERTED = 'inserted'
UPDATED = 'updated'

_LOCK_STRIPES = 64


class EdgeRecord(NamedTuple):
    dst: int
    prop: float


@dataclass
class VertexRecord:
    external_id: Any
    traversal_link: Any = None
    query_link: Any = None
    tail_link: Any = None
    degree: int = 0  # stored records, dangling ones included
    delete_flag: bool = False
    level: int = 0
    props: dict = field(default_factory=dict)


class AuditReport(NamedTuple):
    block_count: int
    edge_count: int
    ordered: bool
    problems: tuple = ()


class CBList(object):
    """Dynamic directed graph with cache-line-aligned adjacency storage.

    Parameters
    ----------
    cache_line_size: int, optional
        Bytes per cache line (default 64)
    chunk_lines: int, optional
        Cache lines per small chunk (default 4, i.e. 16 records)
    node_lines: int, optional
        Cache lines per B+ node (default 4)
    property_mode: {'aoe', 'aoa'}, optional
        Array-of-edges records or parallel arrays of destinations and
        properties (default 'aoe')

    Notes
    ----------
    Vertices are addressed by dense logical ids handed out by
    :meth:`insert_vertex`; :meth:`lookup` translates external ids. Edge
    records whose destination was deleted stay in place and are filtered
    from every scan.
    """

    def __init__(self, cache_line_size=CACHE_LINE_SIZE,
                 chunk_lines=CHUNK_CACHE_LINES, node_lines=NODE_CACHE_LINES,
                 property_mode=DEFAULT_PROPERTY_MODE):
        self.allocator = BlockAllocator(cache_line_size, chunk_lines,
                                        node_lines, property_mode)
        self.id_map = IdMap()
        self._vertices = []
        self._owners = []
        self._head = None
        self._deleted = set()

        self._table_lock = threading.Lock()
        self._chain_lock = threading.RLock()
        self._vertex_locks = [threading.Lock() for _ in range(_LOCK_STRIPES)]
        self._readers = 0
        self._readers_lock = threading.Lock()

    # ------------------------------------------------------------------
    # geometry and bookkeeping

    @property
    def chunk_capacity(self):
        return self.allocator.chunk_capacity

    @property
    def leaf_capacity(self):
        return self.allocator.leaf_capacity

    @property
    def fanout(self):
        return self.allocator.fanout

    @property
    def property_mode(self):
        return self.allocator.property_mode

    @property
    def chain_head(self):
        return self._head

    @property
    def vertex_count(self):
        """Length of the vertex table, deleted slots included."""
        return len(self._vertices)

    @property
    def live_vertex_count(self):
        return len(self._vertices) - len(self._deleted)

    @property
    def edge_count(self):
        return sum(record.degree for record in self._vertices)

    @property
    def block_count(self):
        return self.allocator.edge_blocks

    @property
    def deleted(self):
        return self._deleted

    def is_live(self, v):
        return (isinstance(v, (int, np.integer)) and
                0 <= v < len(self._vertices) and
                not self._vertices[v].delete_flag)

    def vertices(self):
        return [v for v, record in enumerate(self._vertices)
                if not record.delete_flag]

    def lookup(self, external_id):
        v = self.id_map.lookup(external_id)
        if not self.is_live(v):
            raise UnknownVertex(external_id)
        return v

    def external_id(self, v):
        return self.id_map.external(v)

    def record(self, v):
        """The live vertex record itself; callers must not mutate it."""
        if not self.is_live(v):
            raise UnknownVertex(v)
        return self._vertices[v]

    def read_vertex(self, v):
        """Copy of the vertex record; deleted vertices are readable and
        carry ``delete_flag`` set."""
        if not (isinstance(v, (int, np.integer)) and
                0 <= v < len(self._vertices)):
            raise UnknownVertex(v)
        record = copy.copy(self._vertices[v])
        record.props = dict(record.props)
        return record

    @contextmanager
    def reading(self):
        """Mark a scan in progress; mutations assert none is running."""
        with self._readers_lock:
            self._readers += 1
        try:
            yield self
        finally:
            with self._readers_lock:
                self._readers -= 1

    def _check_mutable(self):
        assert self._readers == 0, \
            "graph mutated from inside a scan callback"

    def _vertex_lock(self, v):
        return self._vertex_locks[v % _LOCK_STRIPES]

    # ------------------------------------------------------------------
    # GTChain splicing; callers hold the chain lock

    def _splice_in(self, v, first, last):
        index = bisect_left(self._owners, v)
        if index < len(self._owners):
            last.next = self._vertices[self._owners[index]].traversal_link
        else:
            last.next = None
        if index > 0:
            self._vertices[self._owners[index - 1]].tail_link.next = first
        else:
            self._head = first
        self._owners.insert(index, v)

    def _splice_out(self, v):
        index = bisect_left(self._owners, v)
        assert self._owners[index] == v
        following = self._vertices[v].tail_link.next
        if index > 0:
            self._vertices[self._owners[index - 1]].tail_link.next = following
        else:
            self._head = following
        del self._owners[index]

    def _replace_first(self, v, first, last, old):
        last.next = old.next
        index = bisect_left(self._owners, v)
        if index > 0:
            self._vertices[self._owners[index - 1]].tail_link.next = first
        else:
            self._head = first

    # ------------------------------------------------------------------
    # vertex operations

    def insert_vertex(self, external_id, props=None):
        """Append a vertex and return its logical id.

        The vertex owns no block until its first edge arrives.
        """
        self._check_mutable()
        with self._table_lock:
            v = self.id_map.add(external_id, self.is_live)
            self._vertices.append(VertexRecord(external_id,
                                               props=dict(props or {})))
        return v

    def delete_vertex(self, v):
        self._check_mutable()
        record = self.record(v)
        with self._vertex_lock(v), self._chain_lock:
            if record.traversal_link is not None:
                self._splice_out(v)
                if record.level == 0:
                    self.allocator.free(record.traversal_link)
                else:
                    for node in list(bplus_tree.iter_nodes(record.query_link)):
                        self.allocator.free(node)
            record.traversal_link = record.query_link = None
            record.tail_link = None
            record.degree = record.level = 0
            record.delete_flag = True
            self._deleted.add(v)

    def update_vertex_prop(self, v, props):
        self._check_mutable()
        record = self.record(v)
        with self._vertex_lock(v):
            record.props.update(props)

    # ------------------------------------------------------------------
    # edge operations

    def insert_edge(self, src, dst, prop=1.0):
        """Insert ``src -> dst`` or overwrite its property.

        Returns
        ----------
        str
            'inserted' for a new edge, 'updated' for an upsert.
        """
        self._check_mutable()
        record = self.record(src)
        if not self.is_live(dst):
            raise UnknownVertex(dst)
        dst, prop = int(dst), float(prop)

        with self._vertex_lock(src):
            if record.level > 0:
                with self._chain_lock:
                    added = bplus_tree.insert(self.allocator, record, src,
                                              dst, prop)
                if added:
                    record.degree += 1
                return INSERTED if added else UPDATED

            chunk = record.traversal_link
            if chunk is None:
                with self._chain_lock:
                    chunk = self.allocator.new_chunk(src)
                    self._splice_in(src, chunk, chunk)
                    record.traversal_link = record.tail_link = chunk

            pos, found = chunk.search(dst)
            if found:
                chunk.prop[pos] = prop
                return UPDATED
            if not chunk.full:
                chunk.insert_at(pos, dst, prop)
            else:
                with self._chain_lock:
                    self._promote_to_tree(src, record, chunk, pos, dst, prop)
            record.degree += 1
            return INSERTED

    def _promote_to_tree(self, v, record, chunk, pos, dst, prop):
        keys, props = chunk.take()
        keys = np.insert(keys, pos, dst)
        props = np.insert(props, pos, prop)
        leaves, root = bplus_tree.build_tree(self.allocator, v, keys, props)
        self._replace_first(v, leaves[0], leaves[-1], chunk)
        record.traversal_link = leaves[0]
        record.tail_link = leaves[-1]
        record.query_link = root
        record.level = len(leaves)
        self.allocator.free(chunk)
        logger.debug("Vertex %d promoted to a B+ tree with %d leaves",
                     v, record.level)

    def promote_to_tree(self, v):
        """Force a chunk-resident vertex onto a B+ tree.

        Promotion normally happens on chunk overflow; forcing it keeps all
        records and their order.
        """
        self._check_mutable()
        record = self.record(v)
        with self._vertex_lock(v), self._chain_lock:
            if record.level > 0:
                return
            chunk = record.traversal_link
            if chunk is None:
                chunk = self.allocator.new_chunk(v)
                self._splice_in(v, chunk, chunk)
            keys, props = chunk.take()
            leaves, root = bplus_tree.build_tree(self.allocator, v, keys,
                                                 props)
            self._replace_first(v, leaves[0], leaves[-1], chunk)
            record.traversal_link = leaves[0]
            record.tail_link = leaves[-1]
            record.query_link = root
            record.level = len(leaves)
            self.allocator.free(chunk)

    def delete_edge(self, src, dst):
        """Remove ``src -> dst``; returns False when the edge is absent."""
        self._check_mutable()
        record = self.record(src)
        dst = int(dst)
        with self._vertex_lock(src):
            if record.level > 0:
                with self._chain_lock:
                    removed = bplus_tree.delete(self.allocator, record, dst)
            else:
                chunk = record.traversal_link
                if chunk is None:
                    return False
                pos, removed = chunk.search(dst)
                if removed:
                    chunk.remove_at(pos)
            if removed:
                record.degree -= 1
            return removed

    def _locate(self, record, dst):
        if record.level > 0:
            leaf, _ = bplus_tree.descend(record.query_link, dst)
        else:
            leaf = record.traversal_link
            if leaf is None:
                return None, 0
        pos, found = leaf.search(dst)
        return (leaf, pos) if found else (None, 0)

    def find_edge(self, src, dst):
        """The live edge ``src -> dst`` or None; records pointing at a
        deleted vertex are not returned."""
        dst = int(dst)
        if dst in self._deleted:
            return None
        block, pos = self._locate(self.record(src), dst)
        if block is None:
            return None
        return EdgeRecord(int(block.dst[pos]), float(block.prop[pos]))

    def update_edge_prop(self, src, dst, prop):
        """Modify the property of an existing edge only."""
        self._check_mutable()
        record = self.record(src)
        with self._vertex_lock(src):
            block, pos = self._locate(record, int(dst))
            if block is None:
                return False
            block.prop[pos] = float(prop)
            return True

    # ------------------------------------------------------------------
    # scans

    def vertex_blocks(self, v):
        """The chunk or leaves of ``v`` in chain order."""
        record = self.record(v)
        block = record.traversal_link
        for _ in range(max(record.level, 1)):
            if block is None:
                return
            yield block
            block = block.next

    def neighbors(self, v, include_dangling=False):
        deleted = None if include_dangling else self._deleted
        for block in self.vertex_blocks(v):
            for dst, prop in block.records():
                if deleted and dst in deleted:
                    continue
                yield EdgeRecord(dst, prop)

    def out_degree(self, v):
        """Live out-degree, dangling records excluded."""
        if not self._deleted:
            return self.record(v).degree
        return sum(1 for _ in self.neighbors(v))

    def iter_chain(self, start=None, end=None):
        block = self._head if start is None else start
        while block is not None and block is not end:
            yield block
            block = block.next

    def iter_edges(self, include_dangling=False):
        """All ``(src, dst, prop)`` triples in GTChain order."""
        deleted = None if include_dangling else self._deleted
        for block in self.iter_chain():
            src = block.owner
            for dst, prop in block.records():
                if deleted and dst in deleted:
                    continue
                yield src, dst, prop

    # ------------------------------------------------------------------
    # diagnostics

    def gtchain_audit(self):
        """Walk the GTChain and check its structural invariants.

        Returns
        ----------
        AuditReport
            Block and record counts seen on the chain, whether ordering
            held, and a description of every violation found.
        """
        problems = []
        per_owner = {}
        blocks = edges = 0
        previous_owner = -1
        previous_key = None
        limit = self.allocator.edge_blocks

        for block in self.iter_chain():
            blocks += 1
            if blocks > limit:
                problems.append('chain longer than the allocated blocks')
                break
            owner = block.owner
            if block.kind not in (CHUNK, LEAF):
                problems.append('{0!r} on the chain'.format(block))
            if owner is None or not self.is_live(owner):
                problems.append('{0!r} owned by a dead vertex'.format(block))
                previous_owner = -1 if owner is None else owner
                continue
            if owner < previous_owner:
                problems.append('vertex {0} after vertex {1}'.format(
                    owner, previous_owner))
            if owner != previous_owner:
                previous_key = None
            count, total = per_owner.get(owner, (0, 0))
            per_owner[owner] = (count + 1, total + block.count)
            if block.count > block.capacity:
                problems.append('{0!r} over capacity'.format(block))
            if block.count:
                keys = block.dst[:block.count]
                if block.count > 1 and not np.all(np.diff(keys) > 0):
                    problems.append('{0!r} unsorted'.format(block))
                if previous_key is not None and keys[0] <= previous_key:
                    problems.append('{0!r} overlaps its predecessor'.format(
                        block))
                previous_key = int(keys[-1])
            edges += block.count
            previous_owner = owner

        for owner in self._owners:
            record = self._vertices[owner]
            count, total = per_owner.pop(owner, (0, 0))
            if count != max(record.level, 1):
                problems.append('vertex {0}: {1} blocks for level {2}'.format(
                    owner, count, record.level))
            if total != record.degree:
                problems.append('vertex {0}: {1} records for degree '
                                '{2}'.format(owner, total, record.degree))
            if record.level > 0:
                problems.extend('vertex {0}: {1}'.format(owner, problem)
                                for problem in bplus_tree.audit(record))
        for owner in per_owner:
            problems.append('vertex {0} on the chain but not registered'
                            .format(owner))

        return AuditReport(blocks, edges, not problems, tuple(problems))

    def chain_stats(self):
        """Block counts, bytes and fill ratio of the edge storage."""
        capacity = records = 0
        for block in self.iter_chain():
            capacity += block.capacity
            records += block.count
        live = self.allocator.live
        return {'chunks': live[CHUNK], 'leaves': live[LEAF],
                'internal': live[INTERNAL],
                'bytes': self.allocator.live_bytes,
                'fill_ratio': records / capacity if capacity else 0.0}

    def __repr__(self):
        return '<CBList vertices={0} edges={1} blocks={2}>'.format(
            self.live_vertex_count, self.edge_count, self.block_count)
