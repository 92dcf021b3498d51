import numpy as np


class Frontier(object):
    """Set of active vertices, convertible between a sorted id list and a
    dense bitmap."""

    def __init__(self, size, vertices=()):
        self.size = size
        self._mask = np.zeros(size, dtype=bool)
        vertices = np.asarray(list(vertices), dtype=np.int64)
        if vertices.size:
            self._mask[vertices] = True

    @classmethod
    def from_mask(cls, mask):
        frontier = cls(len(mask))
        frontier._mask = np.asarray(mask, dtype=bool).copy()
        return frontier

    @classmethod
    def full(cls, graph):
        return cls(graph.vertex_count, graph.vertices())

    def to_mask(self):
        return self._mask.copy()

    def to_list(self):
        return np.flatnonzero(self._mask)

    def density(self, live_count):
        return len(self) / live_count if live_count else 0.0

    def __len__(self):
        return int(np.count_nonzero(self._mask))

    def __bool__(self):
        return bool(self._mask.any())

    def __contains__(self, v):
        return 0 <= v < self.size and bool(self._mask[v])

    def __iter__(self):
        return iter(self.to_list().tolist())

    def __repr__(self):
        return '<Frontier {0}/{1}>'.format(len(self), self.size)
