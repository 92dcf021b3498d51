"""Batched graph updates.

Edge operations are grouped by source so each vertex is touched by exactly
one task; the groups are spread over the worker tasks heaviest first.
Vertex insertions and property updates run serially ahead of the edge
groups. A vertex deletion closes the current epoch and runs on its own, so
edge operations listed before it still see the vertex.
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Any, NamedTuple, Optional

from cbgraph.access.operations import find_neighbor_steps
from cbgraph.access.task import SuspendableTask
from cbgraph.adapt.strategy import StrategyConfig
from cbgraph.engine.executor import run_partitioned
from cbgraph.engine.task_pool import SchedulerStats
from cbgraph.errors import BatchOpError, TaskPanicked

logger = logging.getLogger(__name__)

INSERT_EDGE = 'insert_edge'
DELETE_EDGE = 'delete_edge'
UPDATE_EDGE = 'update_edge'
INSERT_VERTEX = 'insert_vertex'
DELETE_VERTEX = 'delete_vertex'
UPDATE_VERTEX = 'update_vertex'

EDGE_OPS = (INSERT_EDGE, DELETE_EDGE, UPDATE_EDGE)
VERTEX_OPS = (INSERT_VERTEX, DELETE_VERTEX, UPDATE_VERTEX)


class UpdateOp(NamedTuple):
    """One update, addressed by external vertex ids.

    ``src`` is the vertex of a vertex op; edge ops use ``src``, ``dst`` and
    ``prop``; vertex inserts and property updates carry ``props``.
    """
    kind: str
    src: Any
    dst: Any = None
    prop: Optional[float] = None
    props: Optional[dict] = None
    timestamp: Optional[float] = None


class GroupedBatch(NamedTuple):
    vertex_ops: list
    groups: dict


@dataclass
class UpdateStats:
    applied: int = 0
    elapsed: float = 0.0
    epochs: int = 0
    scheduler: SchedulerStats = field(default_factory=SchedulerStats)

    @property
    def throughput(self):
        return self.applied / self.elapsed if self.elapsed > 0 else 0.0

    def merge(self, other):
        self.applied += other.applied
        self.elapsed += other.elapsed
        self.epochs += other.epochs
        self.scheduler.merge(other.scheduler)
        return self


def apply_update(graph, op):
    """Apply a single update immediately (the non-batched API)."""
    kind = op.kind
    if kind == INSERT_VERTEX:
        return graph.insert_vertex(op.src, op.props)
    if kind == DELETE_VERTEX:
        return graph.delete_vertex(graph.lookup(op.src))
    if kind == UPDATE_VERTEX:
        return graph.update_vertex_prop(graph.lookup(op.src), op.props or {})
    src = graph.lookup(op.src)
    if kind == INSERT_EDGE:
        prop = 1.0 if op.prop is None else op.prop
        return graph.insert_edge(src, graph.lookup(op.dst), prop)
    # the destination of a removed or modified edge may already be deleted
    dst = graph.id_map.lookup(op.dst)
    if kind == DELETE_EDGE:
        return graph.delete_edge(src, dst)
    if kind == UPDATE_EDGE:
        return graph.update_edge_prop(src, dst, op.prop)
    raise ValueError("Unknown update kind {0!r}".format(kind))


def group_by_source(batch, offset=0):
    """Separate vertex ops and group edge ops by source.

    Returns
    ----------
    GroupedBatch
        ``vertex_ops`` as ``(index, op)`` in batch order and ``groups``
        mapping each source to its ``(index, op)`` list in batch order.
        Indices count from ``offset``.
    """
    vertex_ops, groups = [], {}
    for index, op in enumerate(batch, offset):
        if op.kind in VERTEX_OPS:
            vertex_ops.append((index, op))
        elif op.kind in EDGE_OPS:
            groups.setdefault(op.src, []).append((index, op))
        else:
            raise BatchOpError(index, ValueError(
                "Unknown update kind {0!r}".format(op.kind)))
    return GroupedBatch(vertex_ops, groups)


def _split_epochs(batch):
    current, start = [], 0
    for index, op in enumerate(batch):
        if op.kind == DELETE_VERTEX:
            if current:
                yield start, current
            yield index, [op]
            current, start = [], index + 1
        else:
            current.append(op)
    if current:
        yield start, current


def _group_steps(graph, groups, ctx):
    applied = 0
    for _, ops in groups:
        for index, op in ops:
            try:
                src = graph.lookup(op.src)
                dst = graph.id_map.lookup(op.dst)
                # locate first so the descent can overlap with other tasks
                yield from find_neighbor_steps(graph, src, dst, ctx)
                apply_update(graph, op)
            except Exception as error:
                raise BatchOpError(index, error) from error
            applied += 1
    return applied


def batch_update(graph, batch, config=None):
    """Apply a batch of updates with interleaved per-source tasks.

    Parameters
    ----------
    graph: CBList
        Graph to update in place.
    batch: sequence of UpdateOp
        Updates in logical order.
    config: StrategyConfig, optional
        Threads, tasks per thread, prefetch strategy and scheduler
        (default: trimmed polling).

    Returns
    ----------
    UpdateStats
        Operations applied, wall time and scheduler statistics. The final
        graph equals applying the batch one op at a time.

    Raises
    ----------
    BatchOpError
        When an op fails; ``op_index`` is its position in the batch.
    """
    config = (config or StrategyConfig(scheduler='trimmed')).validate()
    n_parts = config.threads * config.tasks_per_thread
    stats = UpdateStats()
    start = time.perf_counter()

    for offset, epoch in _split_epochs(batch):
        stats.epochs += 1
        grouped = group_by_source(epoch, offset)
        for index, op in grouped.vertex_ops:
            try:
                apply_update(graph, op)
            except Exception as error:
                raise BatchOpError(index, error) from error
        stats.applied += len(grouped.vertex_ops)
        if not grouped.groups:
            continue

        ordered = sorted(grouped.groups.items(), key=lambda item: -len(item[1]))
        slots = [[] for _ in range(n_parts)]
        for position, group in enumerate(ordered):
            slots[position % n_parts].append(group)

        def make_task(part, ctx):
            return SuspendableTask(_group_steps(graph, slots[part], ctx),
                                   name='update part {0}'.format(part))

        try:
            run = run_partitioned(config, make_task)
        except TaskPanicked as panic:
            raise panic.error from panic.error.__cause__
        stats.applied += sum(run['results'])
        stats.scheduler.merge(run['scheduler'])

    stats.elapsed = time.perf_counter() - start
    logger.debug("Applied %d updates in %.4fs (%d epochs)", stats.applied,
                 stats.elapsed, stats.epochs)
    return stats
