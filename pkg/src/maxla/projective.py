"""Linear-time solvers for projective maximum and minimum arrangements.

A maximum projective arrangement of a rooted tree has a rigid recursive
shape: every subtree occupies a contiguous interval, its root sits at one
end of that interval, and its child subtrees fill the rest of the interval
ordered non-increasingly by size with the smallest farthest from the root.
Consecutive levels branch in opposite directions, which pushes every child's
root as far from its parent as the interval allows.

:func:`max_projective` materializes that shape top-down over position
intervals; :func:`max_projective_cost` evaluates its cost directly from the
sorted child lists without building an arrangement, via the decomposition

    cost(u) = sum of child costs + sum over children i of the partial sums
              size(1) + ... + size(i)

(the i-th root-to-child edge spans exactly the i largest child subtrees).

The companion :func:`min_projective` solves the minimization problem with
the classic inside-out layout: children alternate sides of their parent,
smallest adjacent and largest at the ends, with the heavier alternation
class placed away from the grandparent so the upward edge stays short.

All three run in O(n) time and space and use explicit worklists, so path
trees with millions of vertices are fine.
"""

from __future__ import annotations

from .arrangements import Arrangement, cost
from .trees import RootedTree, SortedChildLists, SubtreeSizeTable, sorted_child_lists, subtree_sizes

_LEFT = 0
_RIGHT = 1
_NO_PARENT = 2


def _resolve_lists(
    rt: RootedTree,
    sizes: SubtreeSizeTable | None,
    lists: SortedChildLists | None,
) -> SortedChildLists:
    if lists is not None:
        if lists.root != rt.root:
            raise ValueError(f"child lists rooted at {lists.root}, tree rooted at {rt.root}")
        return lists
    if sizes is None:
        sizes = subtree_sizes(rt.tree)
    return sorted_child_lists(rt, sizes)


def max_projective(
    rt: RootedTree,
    *,
    sizes: SubtreeSizeTable | None = None,
    lists: SortedChildLists | None = None,
) -> tuple[Arrangement, int]:
    """A maximum projective arrangement of ``rt`` and its cost.

    The root is placed on the right end of the full interval (the starting
    side is a convention; mirroring gives the symmetric optimum). Each child
    subtree recurses into its sub-interval with the branching side flipped.
    The returned cost is recomputed from the arrangement, independently of
    the closed-form evaluator, so the two can be checked against each other.

    Precomputed ``sizes`` or ``lists`` may be supplied to share work across
    calls on the same tree.
    """
    tree = rt.tree
    n = tree.n
    child_lists = _resolve_lists(rt, sizes, lists).lists
    pos = [0] * (n + 1)
    stack: list[tuple[int, int, int, int]] = [(rt.root, _RIGHT, 1, n)]
    push = stack.append
    while stack:
        u, side, a, b = stack.pop()
        if side == _RIGHT:
            pos[u] = b
            cursor = b - 1
            for v, nv in child_lists[u]:
                push((v, _LEFT, cursor - nv + 1, cursor))
                cursor -= nv
        else:
            pos[u] = a
            cursor = a + 1
            for v, nv in child_lists[u]:
                push((v, _RIGHT, cursor, cursor + nv - 1))
                cursor += nv
    arr = Arrangement(pos[1:])
    return arr, cost(tree, arr)


def max_projective_cost(
    rt: RootedTree,
    lists: SortedChildLists | None = None,
    *,
    sizes: SubtreeSizeTable | None = None,
) -> int:
    """Cost of a maximum projective arrangement, without building one.

    Flattens the recursive decomposition: every vertex contributes, for its
    i-th largest child (out of k), (k - i + 1) times that child's size —
    which is exactly the sum of partial sums of child sizes.
    """
    child_lists = _resolve_lists(rt, sizes, lists).lists
    total = 0
    for entries in child_lists[1:]:
        k = len(entries)
        for i in range(k):
            total += (k - i) * entries[i][1]
    return total


def min_projective(
    rt: RootedTree,
    *,
    sizes: SubtreeSizeTable | None = None,
    lists: SortedChildLists | None = None,
) -> tuple[Arrangement, int]:
    """A minimum projective arrangement of ``rt`` and its cost.

    Children go on alternating sides of their parent, smallest adjacent to
    it and largest at the interval ends. Ranking children by size (largest
    first), odd ranks form the heavier side; that side faces away from the
    grandparent so the parent sits as close as possible to the interval end
    its own edge leaves through. At the root the heavy side goes left, a
    cost-neutral convention.
    """
    tree = rt.tree
    n = tree.n
    child_lists = _resolve_lists(rt, sizes, lists).lists
    pos = [0] * (n + 1)
    stack: list[tuple[int, int, int, int]] = [(rt.root, _NO_PARENT, 1, n)]
    push = stack.append
    while stack:
        u, parent_side, a, b = stack.pop()
        children = child_lists[u]
        # Odd ranks (largest first) go on the side away from the parent.
        if parent_side == _LEFT:
            left_side, right_side = children[1::2], children[0::2]
        else:  # parent beyond the right end, or no parent at all
            left_side, right_side = children[0::2], children[1::2]
        cursor = a
        for v, nv in left_side:  # outermost (largest) block first
            push((v, _RIGHT, cursor, cursor + nv - 1))
            cursor += nv
        pos[u] = cursor
        cursor += 1
        for v, nv in reversed(right_side):  # innermost (smallest) block first
            push((v, _LEFT, cursor, cursor + nv - 1))
            cursor += nv
    arr = Arrangement(pos[1:])
    return arr, cost(tree, arr)
