"""Vertex- and edge-centric processing over a CBList.

Edge functions are called as ``f(src, dst, prop, acc)`` and may only
communicate through ``acc.push(target, value)``. Every task owns its own
accumulator and the accumulators are merged in task order. Minima and sums
are exact, so merged values do not depend on threads, tasks per thread,
partitioner or interleaving; only the order of collected items follows
the source order of the scan.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from cbgraph.access.operations import (SubChain, chain_scan_steps,
                                       vertex_scan_steps)
from cbgraph.adapt.strategy import StrategyConfig
from cbgraph.engine.executor import run_partitioned
from cbgraph.engine.frontier import Frontier
from cbgraph.engine.partition import (partition_gtchain,
                                      partition_vertex_table)

logger = logging.getLogger(__name__)

REDUCTIONS = ('min', 'add', 'collect')

_IDLE_SUBCHAIN = SubChain(None, None, 0)


def _identity(dtype):
    dtype = np.dtype(dtype)
    if np.issubdtype(dtype, np.integer):
        return np.iinfo(dtype).max
    return np.inf


class Accumulator(object):
    """Per-task reduction buffer.

    Floating-point sums keep every pushed term so the merged total can be
    rounded once, whatever the task layout.
    """

    __slots__ = ('reduce', 'buffer', 'touched', 'collected', 'terms')

    def __init__(self, reduce, size, dtype):
        self.reduce = reduce
        self.touched = np.zeros(size, dtype=bool)
        self.buffer = self.collected = self.terms = None
        if reduce == 'min':
            self.buffer = np.full(size, _identity(dtype), dtype=dtype)
        elif reduce == 'add' and np.issubdtype(np.dtype(dtype),
                                                np.integer):
            self.buffer = np.zeros(size, dtype=dtype)
        elif reduce == 'add':
            self.terms = ([], [])
        else:
            self.collected = {}

    def push(self, target, value):
        self.touched[target] = True
        if self.reduce == 'min':
            if value < self.buffer[target]:
                self.buffer[target] = value
        elif self.terms is not None:
            self.terms[0].append(target)
            self.terms[1].append(value)
        elif self.reduce == 'add':
            self.buffer[target] += value
        else:
            self.collected.setdefault(target, []).append(value)


def _exact_sum(accumulators, size, dtype):
    targets = np.concatenate([np.asarray(acc.terms[0], dtype=np.int64)
                              for acc in accumulators])
    values = np.concatenate([np.asarray(acc.terms[1], dtype=np.float64)
                             for acc in accumulators])
    merged = np.zeros(size, dtype=dtype)
    if not len(targets):
        return merged
    order = np.argsort(targets, kind='stable')
    targets, values = targets[order], values[order]
    starts = np.flatnonzero(np.r_[True, targets[1:] != targets[:-1]])
    for target, segment in zip(targets[starts].tolist(),
                               np.split(values, starts[1:])):
        merged[target] = math.fsum(segment.tolist())
    return merged


def process_vertex(graph, f, active=None, config=None):
    """Apply ``f(v)`` to every live (or every active) vertex.

    Parameters
    ----------
    graph: CBList
        Graph whose vertex table is scanned.
    f: callable
        Side-effect free function of a logical vertex id.
    active: iterable or Frontier, optional
        Restrict to these vertices (default all live vertices).
    config: StrategyConfig, optional
        Only ``threads`` is used; the vertex table is split into ranges.

    Returns
    ----------
    dict
        Mapping from vertex id to ``f(v)``, in ascending id order.
    """
    config = config or StrategyConfig()
    if active is None:
        wanted = None
    else:
        wanted = set(int(v) for v in active)

    def scan(bounds):
        out = []
        for v in range(*bounds):
            if not graph.is_live(v) or (wanted is not None and
                                        v not in wanted):
                continue
            out.append((v, f(v)))
        return out

    ranges = partition_vertex_table(graph.vertex_count, config.threads)
    if not ranges:
        return {}
    if len(ranges) == 1:
        parts = [scan(ranges[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(ranges)) as executor:
            parts = list(executor.map(scan, ranges))
    return dict(pair for part in parts for pair in part)


def _active_mask(graph, active):
    if active is None:
        return None
    if isinstance(active, Frontier):
        mask = active.to_mask()
    else:
        mask = Frontier(graph.vertex_count, active).to_mask()
    if len(mask) < graph.vertex_count:
        mask = np.concatenate([mask, np.zeros(graph.vertex_count - len(mask),
                                              dtype=bool)])
    return mask


def process_edge(graph, dense_f, sparse_f=None, active=None, values=None,
                 reduce='min', config=None, mode='auto', dtype=np.float64):
    """Push along out-edges of the active vertices.

    Parameters
    ----------
    graph: CBList
        Graph to scan.
    dense_f: callable
        ``dense_f(src, dst, prop, acc)`` used when the whole GTChain is
        scanned.
    sparse_f: callable, optional
        ``sparse_f(src, dst, prop, acc)`` used when only the active
        vertices' lists are scanned (default ``dense_f``).
    active: iterable or Frontier, optional
        Active source vertices; None means every vertex is active.
    values: numpy.ndarray, optional
        Current vertex values. For 'min' they seed the result and decide
        which vertices improved.
    reduce: {'min', 'add', 'collect'}
        How pushed values combine per target.
    config: StrategyConfig, optional
        Execution configuration.
    mode: {'auto', 'dense', 'sparse'}
        'auto' scans densely when the active fraction reaches
        ``config.dense_threshold``.
    dtype: numpy dtype
        Buffer type for 'min' and 'add' when ``values`` is not given.

    Returns
    ----------
    dict
        * values: merged result (array, or dict of lists for 'collect')
        * frontier: Frontier of targets that improved ('min') or received
          a push ('add', 'collect')
        * mode: 'dense' or 'sparse'
        * scheduler, counters: execution statistics
    """
    if reduce not in REDUCTIONS:
        raise ValueError("reduce must be one of {0}, got {1!r}".format(
            REDUCTIONS, reduce))
    config = (config or StrategyConfig()).validate()
    sparse_f = sparse_f or dense_f
    size = graph.vertex_count
    if values is not None:
        dtype = values.dtype

    mask = _active_mask(graph, active)
    if mode == 'auto':
        if mask is None:
            mode = 'dense'
        else:
            density = np.count_nonzero(mask) / max(graph.live_vertex_count, 1)
            mode = 'dense' if density >= config.dense_threshold else 'sparse'

    n_parts = config.threads * config.tasks_per_thread
    accumulators = [Accumulator(reduce, size, dtype) for _ in range(n_parts)]

    def scan_vertex_range(bounds, f, acc, ctx):
        for v in range(*bounds):
            if not graph.is_live(v) or (mask is not None and not mask[v]):
                continue
            yield from vertex_scan_steps(
                graph, v, lambda dst, prop, v=v: f(v, dst, prop, acc), ctx)

    if mode == 'dense' and config.partitioner == 'gtchain':
        subchains = partition_gtchain(graph, n_parts)
        # short chains leave the trailing tasks idle
        subchains += [_IDLE_SUBCHAIN] * (n_parts - len(subchains))

        def make_task(part, ctx):
            acc = accumulators[part]
            if mask is None:
                def visit(src, dst, prop):
                    dense_f(src, dst, prop, acc)
            else:
                def visit(src, dst, prop):
                    if mask[src]:
                        dense_f(src, dst, prop, acc)
            return chain_scan_steps(graph, subchains[part], visit, ctx)
    else:
        f = dense_f if mode == 'dense' else sparse_f
        ranges = partition_vertex_table(size, n_parts)
        ranges += [(size, size)] * (n_parts - len(ranges))

        def make_task(part, ctx):
            return scan_vertex_range(ranges[part], f, accumulators[part], ctx)

    with graph.reading():
        run = run_partitioned(config, make_task)

    touched = np.zeros(size, dtype=bool)
    for acc in accumulators:
        touched |= acc.touched

    if reduce == 'collect':
        merged = {}
        for acc in accumulators:
            for target, items in acc.collected.items():
                merged.setdefault(target, []).extend(items)
        changed = touched
    elif reduce == 'min':
        merged = (values.copy() if values is not None
                  else np.full(size, _identity(dtype), dtype=dtype))
        for acc in accumulators:
            np.minimum(merged, acc.buffer, out=merged)
        changed = merged < values if values is not None else touched
    elif accumulators[0].terms is not None:
        merged = _exact_sum(accumulators, size, dtype)
        changed = touched
    else:
        merged = np.zeros(size, dtype=dtype)
        for acc in accumulators:
            merged += acc.buffer
        changed = touched

    logger.debug("process_edge %s pass: %d targets changed", mode,
                 np.count_nonzero(changed))
    return {'values': merged, 'frontier': Frontier.from_mask(changed),
            'mode': mode, 'scheduler': run['scheduler'],
            'counters': run['counters']}
