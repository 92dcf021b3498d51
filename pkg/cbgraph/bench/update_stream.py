import logging
import time

import numpy as np

from cbgraph.adapt.strategy import StrategyConfig
from cbgraph.bench.report import graph_checksum
from cbgraph.engine.batch import (DELETE_EDGE, DELETE_VERTEX, INSERT_EDGE,
                                  UPDATE_EDGE, UpdateOp, UpdateStats,
                                  batch_update)
from cbgraph.global_settings import WEIGHT_RANGE

logger = logging.getLogger(__name__)

STREAM_KINDS = ('edges', 'properties', 'vertices')


class _EdgePool(object):
    """Edge set with O(1) random pick and removal."""

    def __init__(self, edges):
        self.items = list(edges)
        self.index = {edge: i for i, edge in enumerate(self.items)}

    def __len__(self):
        return len(self.items)

    def __contains__(self, edge):
        return edge in self.index

    def add(self, edge):
        self.index[edge] = len(self.items)
        self.items.append(edge)

    def remove(self, edge):
        i = self.index.pop(edge)
        last = self.items.pop()
        if i < len(self.items):
            self.items[i] = last
            self.index[last] = i

    def pick(self, rng):
        return self.items[int(rng.integers(len(self.items)))]


def generate_update_stream(graph, n_ops, seed=0, kind='edges',
                           insert_fraction=0.5, delete_vertex_fraction=0.01):
    """
    Draw a replayable stream of updates against a graph

    Parameters
    ----------
    graph: CBList
        Starting graph; it is only read.
    n_ops: int
        Number of updates.
    seed: int
        The same graph, seed and parameters give the same stream.
    kind: {'edges', 'properties', 'vertices'}
        'edges' mixes edge insertions and deletions, 'properties' only
        modifies existing edge weights, 'vertices' mixes edge insertions
        with occasional vertex deletions.
    insert_fraction: float
        Share of insertions in an 'edges' stream (default 0.5)
    delete_vertex_fraction: float
        Share of vertex deletions in a 'vertices' stream (default 0.01)

    Returns
    ----------
    list of UpdateOp
        Addressed by external ids and timestamped by position. Every delete
        or modification targets an edge that exists at that point.
    """
    if kind not in STREAM_KINDS:
        raise ValueError("kind must be one of {0}, got {1!r}".format(
            STREAM_KINDS, kind))
    rng = np.random.default_rng(seed)
    ext = graph.external_id
    vertices = [ext(v) for v in graph.vertices()]
    live = set(vertices)
    pool = _EdgePool((ext(s), ext(d)) for s, d, _ in graph.iter_edges())

    def weight():
        return float(rng.integers(WEIGHT_RANGE[0], WEIGHT_RANGE[1] + 1))

    def fresh_pair():
        for _ in range(100):
            src, dst = (vertices[int(i)] for i in
                        rng.integers(len(vertices), size=2))
            if src != dst and src in live and dst in live and \
                    (src, dst) not in pool:
                return src, dst
        return None

    ops = []
    while len(ops) < n_ops:
        timestamp = float(len(ops))
        draw = rng.random()
        if kind == 'properties':
            if not len(pool):
                break
            src, dst = pool.pick(rng)
            ops.append(UpdateOp(UPDATE_EDGE, src, dst, weight(),
                                timestamp=timestamp))
            continue

        if kind == 'vertices' and draw < delete_vertex_fraction and \
                len(live) > 2:
            victim = vertices[int(rng.integers(len(vertices)))]
            if victim not in live:
                continue
            live.discard(victim)
            for edge in [e for e in pool.items if victim in e]:
                pool.remove(edge)
            ops.append(UpdateOp(DELETE_VERTEX, victim, timestamp=timestamp))
            continue

        inserting = kind == 'vertices' or draw < insert_fraction or \
            not len(pool)
        if inserting:
            pair = fresh_pair()
            if pair is None:
                break
            pool.add(pair)
            ops.append(UpdateOp(INSERT_EDGE, pair[0], pair[1], weight(),
                                timestamp=timestamp))
        else:
            pair = pool.pick(rng)
            pool.remove(pair)
            ops.append(UpdateOp(DELETE_EDGE, pair[0], pair[1],
                                timestamp=timestamp))

    if len(ops) < n_ops:
        logger.warning("Stream stopped after %d of %d updates", len(ops),
                       n_ops)
    return ops


def update_stream_driver(graph, stream, batch_size, config=None):
    """
    Apply a stream in consecutive batches and time it

    Parameters
    ----------
    graph: CBList
        Graph updated in place.
    stream: sequence of UpdateOp
        Updates in order.
    batch_size: int
        Updates per batch; the last batch may be shorter.
    config: StrategyConfig, optional
        Execution configuration of every batch.

    Returns
    ----------
    dict
        * stats: merged UpdateStats
        * batches: number of batches applied
        * elapsed: wall time in seconds
        * throughput: updates per second
        * checksum: graph_checksum after the stream
    """
    if batch_size < 1:
        raise ValueError("batch_size must be at least 1")
    config = config or StrategyConfig(scheduler='trimmed')
    stats = UpdateStats()
    batches = 0
    start = time.perf_counter()
    for offset in range(0, len(stream), batch_size):
        stats.merge(batch_update(graph, stream[offset:offset + batch_size],
                                 config))
        batches += 1
    elapsed = time.perf_counter() - start
    return {'stats': stats, 'batches': batches, 'elapsed': elapsed,
            'throughput': stats.applied / elapsed if elapsed > 0 else 0.0,
            'checksum': graph_checksum(graph)}
