"""Suspendable neighbourhood scans and point lookups.

Each operation comes in two forms: a ``*_steps`` generator that can be
embedded in a larger task with ``yield from``, and a function returning a
:class:`SuspendableTask`. Before reading a block the generators ask the
execution context whether to hint and suspend; between suspensions they
run exactly the plain scan, so visited records and their order never
depend on the strategy.
"""
from typing import Any, NamedTuple

from cbgraph.access.context import ExecutionContext
from cbgraph.access.task import SuspendableTask
from cbgraph.cblist.blocks import LEAF
from cbgraph.cblist.cblist import EdgeRecord
from cbgraph.errors import InvalidSubChain, UnknownVertex


class SubChain(NamedTuple):
    """Contiguous GTChain segment ``[start, end)``; ``end`` None runs to
    the tail."""
    start: Any
    end: Any
    block_count: int


def vertex_scan_steps(graph, v, visit, ctx):
    record = graph.record(v)
    counters = ctx.counters
    deleted = graph.deleted
    block = record.traversal_link
    visited = 0
    for index in range(max(record.level, 1)):
        if block is None:
            break
        if ctx.before_block(block, index):
            yield
        counters.blocks += 1
        for dst, prop in block.records():
            if deleted and dst in deleted:
                continue
            visit(dst, prop)
            visited += 1
        block = block.next
    counters.records += visited
    return visited


def get_neighbors_vertex(graph, v, visit, ctx=None):
    """Scan the out-neighbours of ``v`` as a suspendable task.

    Parameters
    ----------
    graph: CBList
        Graph to read.
    v: int
        Logical vertex id.
    visit: callable
        Called as ``visit(dst, prop)`` for every live neighbour, in
        ascending ``dst`` order. It must not mutate the graph.
    ctx: ExecutionContext, optional
        Strategy and counters (default: all-soft context).

    Returns
    ----------
    SuspendableTask
        Suspends at most once per block; its result is the number of
        records visited.
    """
    if not graph.is_live(v):
        raise UnknownVertex(v)
    ctx = ctx or ExecutionContext()
    return SuspendableTask(vertex_scan_steps(graph, v, visit, ctx),
                           name='vertex {0}'.format(v))


def chain_scan_steps(graph, sub, visit, ctx):
    counters = ctx.counters
    deleted = graph.deleted
    block, end = sub.start, sub.end
    index = visited = 0
    while block is not end:
        if block is None:
            raise InvalidSubChain("Reached the end of the GTChain after {0} "
                                  "blocks without meeting the sub-chain "
                                  "end".format(index))
        if ctx.before_block(block, index):
            yield
        counters.blocks += 1
        src = block.owner
        for dst, prop in block.records():
            if deleted and dst in deleted:
                continue
            visit(src, dst, prop)
            visited += 1
        block = block.next
        index += 1
    counters.records += visited
    return visited


def get_neighbors_chain(graph, sub, visit, ctx=None):
    """Scan a GTChain segment as a suspendable task.

    ``visit(src, dst, prop)`` receives the owning vertex with each record.
    Raises InvalidSubChain when the segment end is not reachable from its
    start.
    """
    if sub.start is None and sub.end is not None:
        raise InvalidSubChain("Sub-chain without a start block")
    ctx = ctx or ExecutionContext()
    return SuspendableTask(chain_scan_steps(graph, sub, visit, ctx),
                           name='chain')


def find_neighbor_steps(graph, src, dst, ctx):
    record = graph.record(src)
    counters = ctx.counters
    if dst in graph.deleted:
        return None
    if record.level == 0:
        chunk = record.traversal_link
        if chunk is None:
            return None
        counters.node_visits += 1
        pos, found = chunk.search(dst)
        if not found:
            return None
        return EdgeRecord(int(chunk.dst[pos]), float(chunk.prop[pos]))

    node = record.query_link
    depth = 0
    while True:
        if ctx.before_block(node, depth):
            yield
        counters.node_visits += 1
        if node.kind == LEAF:
            pos, found = node.search(dst)
            if found:
                return EdgeRecord(int(node.dst[pos]), float(node.prop[pos]))
            return None
        node = node.children[node.locate(dst)]
        depth += 1


def find_neighbor(graph, src, dst, ctx=None):
    """Look up the edge ``src -> dst`` as a suspendable task.

    A chunk-resident source is searched without suspending; a tree is
    descended with one gated suspension per node. The task result is an
    EdgeRecord, or None when the edge is absent or its destination was
    deleted.
    """
    if not graph.is_live(src):
        raise UnknownVertex(src)
    ctx = ctx or ExecutionContext()
    return SuspendableTask(find_neighbor_steps(graph, src, int(dst), ctx),
                           name='find {0}->{1}'.format(src, dst))


def scan_vertices(graph, cond, visit):
    """Call ``visit(v)`` for every live vertex with ``cond(v)`` true."""
    count = 0
    for v in graph.vertices():
        if cond(v):
            visit(v)
            count += 1
    return count
