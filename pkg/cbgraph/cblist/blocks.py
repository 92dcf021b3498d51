"""Cache-line-sized edge blocks and their allocator.

Small chunks and B+ leaves store sorted ``(dst, prop)`` records in
fixed-capacity numpy arrays. In the ``aoe`` layout each record is one
element of a structured array; in the ``aoa`` layout destinations and
properties live in two parallel arrays. Both layouts expose the same
``dst`` and ``prop`` views, so the code above this module never branches
on the layout.
"""
import threading
import numpy as np

from cbgraph.global_settings import MIN_FANOUT

CHUNK = 'chunk'
LEAF = 'leaf'
INTERNAL = 'internal'

EDGE_DTYPE = np.dtype([('dst', '<i8'), ('prop', '<f8')])
RECORD_NBYTES = EDGE_DTYPE.itemsize
# one separator key and one child reference per fanout slot
INTERNAL_SLOT_NBYTES = 16

PROPERTY_MODES = ('aoe', 'aoa')


class RecordBlock(object):
    """Sorted run of edge records; base of SmallChunk and LeafNode."""

    __slots__ = ('kind', 'owner', 'handle', 'capacity', 'count', 'next',
                 'dst', 'prop', '_arrays', 'nbytes')

    def __init__(self, kind, owner, handle, capacity, property_mode):
        self.kind = kind
        self.owner = owner
        self.handle = handle
        self.capacity = capacity
        self.count = 0
        self.next = None
        if property_mode == 'aoe':
            records = np.zeros(capacity, dtype=EDGE_DTYPE)
            self.dst = records['dst']
            self.prop = records['prop']
            self._arrays = (records,)
            self.nbytes = records.nbytes
        else:
            self.dst = np.zeros(capacity, dtype=np.int64)
            self.prop = np.zeros(capacity, dtype=np.float64)
            self._arrays = (self.dst, self.prop)
            self.nbytes = self.dst.nbytes + self.prop.nbytes

    @property
    def full(self):
        return self.count >= self.capacity

    def search(self, key):
        """Position of ``key`` (or its insertion point) and whether it is
        present."""
        pos = int(np.searchsorted(self.dst[:self.count], key))
        return pos, pos < self.count and self.dst[pos] == key

    def insert_at(self, pos, key, prop):
        n = self.count
        assert n < self.capacity
        for array in self._arrays:
            array[pos + 1:n + 1] = array[pos:n]
        self.dst[pos] = key
        self.prop[pos] = prop
        self.count = n + 1

    def remove_at(self, pos):
        n = self.count
        for array in self._arrays:
            array[pos:n - 1] = array[pos + 1:n]
        self.count = n - 1

    def records(self):
        n = self.count
        return zip(self.dst[:n].tolist(), self.prop[:n].tolist())

    def take(self, start=0, stop=None):
        stop = self.count if stop is None else stop
        return self.dst[start:stop].copy(), self.prop[start:stop].copy()

    def assign(self, dst, prop):
        n = len(dst)
        assert n <= self.capacity
        self.dst[:n] = dst
        self.prop[:n] = prop
        self.count = n

    def first_key(self):
        return int(self.dst[0]) if self.count else None

    def last_key(self):
        return int(self.dst[self.count - 1]) if self.count else None

    def __repr__(self):
        return '<{0} #{1} owner={2} {3}/{4}>'.format(
            self.kind, self.handle, self.owner, self.count, self.capacity)


class SmallChunk(RecordBlock):
    __slots__ = ()


class LeafNode(RecordBlock):
    __slots__ = ()


class InternalNode(object):
    """B+ internal node: ``keys[i]`` is the smallest key under
    ``children[i + 1]``."""

    __slots__ = ('kind', 'owner', 'handle', 'capacity', 'keys', 'children',
                 'nbytes')

    def __init__(self, owner, handle, fanout):
        self.kind = INTERNAL
        self.owner = owner
        self.handle = handle
        self.capacity = fanout
        self.keys = []
        self.children = []
        self.nbytes = fanout * INTERNAL_SLOT_NBYTES

    def locate(self, key):
        """Index of the child whose key range holds ``key``."""
        lo, hi = 0, len(self.keys)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.keys[mid] <= key:
                lo = mid + 1
            else:
                hi = mid
        return lo

    def __repr__(self):
        return '<internal #{0} owner={1} children={2}>'.format(
            self.handle, self.owner, len(self.children))


class BlockAllocator(object):
    """Hands out blocks sized to whole cache lines.

    Parameters
    ----------
    cache_line_size: int
        Bytes per cache line.
    chunk_lines: int
        Cache lines per small chunk.
    node_lines: int
        Cache lines per B+ node (leaf or internal).
    property_mode: {'aoe', 'aoa'}
        Record layout inside chunks and leaves.
    """

    def __init__(self, cache_line_size, chunk_lines, node_lines,
                 property_mode='aoe'):
        if property_mode not in PROPERTY_MODES:
            raise ValueError("property_mode must be one of {0}, got "
                             "{1!r}".format(PROPERTY_MODES, property_mode))
        if cache_line_size % RECORD_NBYTES != 0:
            raise ValueError("cache_line_size must be a multiple of {0} "
                             "bytes".format(RECORD_NBYTES))
        if chunk_lines < 1 or node_lines < 1:
            raise ValueError("chunk_lines and node_lines must be positive")

        self.cache_line_size = cache_line_size
        self.property_mode = property_mode
        self.chunk_capacity = chunk_lines * cache_line_size // RECORD_NBYTES
        self.leaf_capacity = node_lines * cache_line_size // RECORD_NBYTES
        self.fanout = max(MIN_FANOUT,
                          node_lines * cache_line_size // INTERNAL_SLOT_NBYTES)

        self._lock = threading.Lock()
        self._next_handle = 0
        self.live = {CHUNK: 0, LEAF: 0, INTERNAL: 0}
        self.live_bytes = 0

    def _register(self, block):
        assert block.nbytes % self.cache_line_size == 0, \
            "block of {0} bytes is not cache-line sized".format(block.nbytes)
        self.live[block.kind] += 1
        self.live_bytes += block.nbytes
        return block

    def _handle(self):
        handle = self._next_handle
        self._next_handle += 1
        return handle

    def new_chunk(self, owner):
        with self._lock:
            return self._register(SmallChunk(
                CHUNK, owner, self._handle(), self.chunk_capacity,
                self.property_mode))

    def new_leaf(self, owner):
        with self._lock:
            return self._register(LeafNode(
                LEAF, owner, self._handle(), self.leaf_capacity,
                self.property_mode))

    def new_internal(self, owner):
        with self._lock:
            return self._register(InternalNode(owner, self._handle(),
                                               self.fanout))

    def free(self, block):
        with self._lock:
            self.live[block.kind] -= 1
            self.live_bytes -= block.nbytes
        block.owner = None
        if block.kind != INTERNAL:
            block.next = None
            block.count = 0

    @property
    def edge_blocks(self):
        return self.live[CHUNK] + self.live[LEAF]
