from cbgraph.access.operations import SubChain
from cbgraph.errors import InvalidTaskCount


def _split_sizes(total, parts):
    base, extra = divmod(total, parts)
    return [base + 1 if i < extra else base for i in range(parts)]


def partition_gtchain(graph, n):
    """Cut the GTChain into ``min(n, blocks)`` consecutive sub-chains.

    Sub-chain sizes differ by at most one block and none is empty; an
    empty chain gives no sub-chain at all.
    """
    if n < 1:
        raise InvalidTaskCount(n)
    blocks = list(graph.iter_chain())
    subchains, start = [], 0
    for size in _split_sizes(len(blocks), min(n, len(blocks)) or 1):
        if size == 0:
            break
        stop = start + size
        subchains.append(SubChain(blocks[start],
                                  blocks[stop] if stop < len(blocks)
                                  else None,
                                  size))
        start = stop
    return subchains


def partition_vertex_table(vertex_count, n):
    """Split logical ids ``[0, vertex_count)`` into ``min(n, vertex_count)``
    non-empty ranges."""
    if n < 1:
        raise InvalidTaskCount(n)
    ranges, start = [], 0
    for size in _split_sizes(vertex_count, min(n, vertex_count) or 1):
        if size == 0:
            break
        ranges.append((start, start + size))
        start += size
    return ranges
