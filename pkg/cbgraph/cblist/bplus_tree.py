"""Per-vertex B+ tree over the neighbours of one high-degree vertex.

The leaves double as GTChain blocks: they are linked left to right through
``next`` and the last leaf links on to the next vertex's first block. The
functions here keep ``record.level`` equal to the number of leaves and
``record.tail_link`` pointing at the last leaf; callers hold the chain lock.
"""
import numpy as np

from cbgraph.cblist.blocks import LEAF


def _even_groups(items, width):
    groups = max(1, -(-len(items) // width))
    bounds = np.linspace(0, len(items), groups + 1).round().astype(int)
    return [items[bounds[i]:bounds[i + 1]] for i in range(groups)]


def build_tree(allocator, owner, dst, prop):
    """Bulk-load sorted records into fresh leaves and internal nodes.

    Returns
    ----------
    tuple
        ``(leaves, root)``; the leaves are chained to each other and the
        last leaf's ``next`` is left as None.
    """
    capacity = allocator.leaf_capacity
    positions = list(range(len(dst)))
    leaves = []
    for group in _even_groups(positions, capacity):
        leaf = allocator.new_leaf(owner)
        if group:
            leaf.assign(dst[group[0]:group[-1] + 1],
                        prop[group[0]:group[-1] + 1])
        if leaves:
            leaves[-1].next = leaf
        leaves.append(leaf)

    level = [(leaf, leaf.first_key()) for leaf in leaves]
    while len(level) > 1:
        parents = []
        for group in _even_groups(level, allocator.fanout):
            node = allocator.new_internal(owner)
            node.children = [child for child, _ in group]
            node.keys = [low for _, low in group[1:]]
            parents.append((node, group[0][1]))
        level = parents
    return leaves, level[0][0]


def descend(root, key):
    """Leaf that holds ``key`` plus the ``(internal, child_index)`` path."""
    node, path = root, []
    while node.kind != LEAF:
        index = node.locate(key)
        path.append((node, index))
        node = node.children[index]
    return node, path


def iter_nodes(root):
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        if node.kind != LEAF:
            stack.extend(node.children)


def insert(allocator, record, owner, key, prop):
    """Upsert ``key``; returns True when a new record was added."""
    leaf, path = descend(record.query_link, key)
    pos, found = leaf.search(key)
    if found:
        leaf.prop[pos] = prop
        return False
    if not leaf.full:
        leaf.insert_at(pos, key, prop)
        return True

    n = leaf.count
    dst = np.insert(leaf.dst[:n], pos, key)
    props = np.insert(leaf.prop[:n], pos, prop)
    split = (n + 2) // 2
    right = allocator.new_leaf(owner)
    leaf.assign(dst[:split], props[:split])
    right.assign(dst[split:], props[split:])
    right.next = leaf.next
    leaf.next = right
    if record.tail_link is leaf:
        record.tail_link = right
    record.level += 1
    _insert_into_parent(allocator, record, owner, path, leaf,
                        right.first_key(), right)
    return True


def _insert_into_parent(allocator, record, owner, path, left, separator,
                        right):
    if not path:
        root = allocator.new_internal(owner)
        root.keys = [separator]
        root.children = [left, right]
        record.query_link = root
        return

    parent, index = path[-1]
    parent.keys.insert(index, separator)
    parent.children.insert(index + 1, right)
    if len(parent.children) <= parent.capacity:
        return

    mid = (len(parent.children) + 1) // 2
    sibling = allocator.new_internal(owner)
    promoted = parent.keys[mid - 1]
    sibling.keys = parent.keys[mid:]
    sibling.children = parent.children[mid:]
    parent.keys = parent.keys[:mid - 1]
    parent.children = parent.children[:mid]
    _insert_into_parent(allocator, record, owner, path[:-1], parent,
                        promoted, sibling)


def delete(allocator, record, key):
    """Remove ``key``; returns False when it was absent."""
    leaf, path = descend(record.query_link, key)
    pos, found = leaf.search(key)
    if not found:
        return False
    leaf.remove_at(pos)
    if path and leaf.count < (leaf.capacity + 1) // 2:
        _rebalance_leaf(allocator, record, leaf, path)
    return True


def _merge_leaves(allocator, record, left, right):
    dst_l, prop_l = left.take()
    dst_r, prop_r = right.take()
    left.assign(np.concatenate([dst_l, dst_r]),
                np.concatenate([prop_l, prop_r]))
    left.next = right.next
    if record.tail_link is right:
        record.tail_link = left
    allocator.free(right)
    record.level -= 1


def _rebalance_leaf(allocator, record, leaf, path):
    parent, index = path[-1]
    minimum = (leaf.capacity + 1) // 2
    left = parent.children[index - 1] if index > 0 else None
    right = (parent.children[index + 1]
             if index + 1 < len(parent.children) else None)

    if right is not None and right.count > minimum:
        key, prop = int(right.dst[0]), float(right.prop[0])
        right.remove_at(0)
        leaf.insert_at(leaf.count, key, prop)
        parent.keys[index] = right.first_key()
        return
    if left is not None and left.count > minimum:
        last = left.count - 1
        key, prop = int(left.dst[last]), float(left.prop[last])
        left.remove_at(last)
        leaf.insert_at(0, key, prop)
        parent.keys[index - 1] = key
        return

    # the leftmost leaf always survives a merge
    if left is not None:
        _merge_leaves(allocator, record, left, leaf)
        del parent.keys[index - 1]
        del parent.children[index]
    else:
        _merge_leaves(allocator, record, leaf, right)
        del parent.keys[index]
        del parent.children[index + 1]
    _rebalance_internal(allocator, record, parent, path[:-1])


def _rebalance_internal(allocator, record, node, path):
    if not path:
        if len(node.children) == 1:
            record.query_link = node.children[0]
            allocator.free(node)
        return

    minimum = (node.capacity + 1) // 2
    if len(node.children) >= minimum:
        return

    parent, index = path[-1]
    left = parent.children[index - 1] if index > 0 else None
    right = (parent.children[index + 1]
             if index + 1 < len(parent.children) else None)

    if right is not None and len(right.children) > minimum:
        node.keys.append(parent.keys[index])
        node.children.append(right.children.pop(0))
        parent.keys[index] = right.keys.pop(0)
        return
    if left is not None and len(left.children) > minimum:
        node.keys.insert(0, parent.keys[index - 1])
        node.children.insert(0, left.children.pop())
        parent.keys[index - 1] = left.keys.pop()
        return

    if left is not None:
        left.keys.append(parent.keys[index - 1])
        left.keys.extend(node.keys)
        left.children.extend(node.children)
        del parent.keys[index - 1]
        del parent.children[index]
        allocator.free(node)
    else:
        node.keys.append(parent.keys[index])
        node.keys.extend(right.keys)
        node.children.extend(right.children)
        del parent.keys[index]
        del parent.children[index + 1]
        allocator.free(right)
    _rebalance_internal(allocator, record, parent, path[:-1])


def audit(record):
    """Problems found in a vertex's tree.

    Leaves must share one depth, non-root nodes must be at least half
    full, every key must lie between the separators above it, and the
    leaves must form the vertex's run of the GTChain.
    """
    root = record.query_link
    problems, leaves = [], []

    def visit(node, depth, low, high):
        if node.kind == LEAF:
            leaves.append((node, depth))
            minimum = 0 if node is root else (node.capacity + 1) // 2
            if node.count < minimum:
                problems.append('{0!r} under half full'.format(node))
            if node.count:
                first, last = node.first_key(), node.last_key()
                if (low is not None and first < low) or \
                        (high is not None and last >= high):
                    problems.append('{0!r} outside its separators'.format(
                        node))
            return
        minimum = 2 if node is root else (node.capacity + 1) // 2
        if not minimum <= len(node.children) <= node.capacity:
            problems.append('{0!r} holds {1} children'.format(
                node, len(node.children)))
        if len(node.keys) != len(node.children) - 1 or \
                any(a >= b for a, b in zip(node.keys, node.keys[1:])):
            problems.append('{0!r} has bad separators'.format(node))
            return
        bounds = [low] + list(node.keys) + [high]
        for i, child in enumerate(node.children):
            visit(child, depth + 1, bounds[i], bounds[i + 1])

    visit(root, 1, None, None)
    if len({depth for _, depth in leaves}) > 1:
        problems.append('leaves at different depths')
    ordered = [leaf for leaf, _ in leaves]
    if len(ordered) != record.level:
        problems.append('{0} leaves for level {1}'.format(len(ordered),
                                                          record.level))
    if ordered[0] is not record.traversal_link or \
            ordered[-1] is not record.tail_link:
        problems.append('first or last leaf not linked from the record')
    for left, right in zip(ordered, ordered[1:]):
        if left.next is not right:
            problems.append('{0!r} not followed by {1!r}'.format(left, right))
            break
    return problems


def height(root):
    depth = 1
    node = root
    while node.kind != LEAF:
        node = node.children[0]
        depth += 1
    return depth
