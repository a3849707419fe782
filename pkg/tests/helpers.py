"""Independent checkers and generators used across the test suite.

Everything here is deliberately written from the definitions, not by calling
back into the solver code paths it is meant to check.
"""

from __future__ import annotations

import random
from itertools import product

from maxla import Arrangement, FreeTree, RootedTree, prufer_decode


def fresh_subtree_size(tree: FreeTree, u: int, v: int) -> int:
    """|vertices on v's side of edge uv| by a from-scratch DFS, O(n) per call."""
    seen = {u, v}
    stack = [v]
    count = 0
    while stack:
        x = stack.pop()
        count += 1
        for y in tree.adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return count


def independent_sorted_neighbors(tree: FreeTree, u: int) -> list[tuple[int, int]]:
    """u's (neighbor, size) pairs sorted non-increasingly, sizes by fresh DFS."""
    pairs = [(v, fresh_subtree_size(tree, u, v)) for v in tree.adj[u]]
    pairs.sort(key=lambda item: (-item[1], item[0]))
    return pairs


def rooted_children(rt: RootedTree) -> list[list[int]]:
    """children[u] for the rooted view, by BFS from the root."""
    tree = rt.tree
    children: list[list[int]] = [[] for _ in range(tree.n + 1)]
    seen = {rt.root}
    queue = [rt.root]
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        for v in tree.adj[u]:
            if v not in seen:
                seen.add(v)
                children[u].append(v)
                queue.append(v)
    return children


def subtree_position_spans(rt: RootedTree, arr: Arrangement) -> dict[int, tuple[int, int, int]]:
    """For each vertex: (min position, max position, vertex count) of its subtree."""
    children = rooted_children(rt)
    spans: dict[int, tuple[int, int, int]] = {}

    def visit_order() -> list[int]:
        order = [rt.root]
        qi = 0
        while qi < len(order):
            order.extend(children[order[qi]])
            qi += 1
        return order

    for u in reversed(visit_order()):
        lo = hi = arr.pos[u]
        count = 1
        for c in children[u]:
            clo, chi, csize = spans[c]
            lo = min(lo, clo)
            hi = max(hi, chi)
            count += csize
        spans[u] = (lo, hi, count)
    return spans


def check_max_projective_structure(rt: RootedTree, arr: Arrangement) -> list[str]:
    """Structural properties a maximum projective arrangement must satisfy.

    Returns a list of violation descriptions (empty when the arrangement
    conforms): root at an end; the root's leaves, if any, consecutive at the
    opposite end; end vertices adjacent in the tree; every subtree
    contiguous with its root at one of its ends; all children of any vertex
    branching the same way.
    """
    tree = rt.tree
    n = tree.n
    problems: list[str] = []
    root_pos = arr.pos[rt.root]
    if root_pos not in (1, n):
        problems.append(f"root at position {root_pos}, not at an end")
    if n >= 2:
        first, last = arr.inv[1], arr.inv[n]
        if first not in tree.adj[last]:
            problems.append(f"end vertices {first} and {last} not adjacent")
    children = rooted_children(rt)
    root_leaves = [c for c in children[rt.root] if len(tree.adj[c]) == 1]
    if root_leaves:
        positions = sorted(arr.pos[leaf] for leaf in root_leaves)
        opposite = n if root_pos == 1 else 1
        block = list(range(positions[0], positions[-1] + 1))
        if positions != block or opposite not in (positions[0], positions[-1]):
            problems.append(f"root leaves at {positions} not a block at the opposite end")
    spans = subtree_position_spans(rt, arr)
    for u in range(1, n + 1):
        lo, hi, count = spans[u]
        if hi - lo + 1 != count:
            problems.append(f"subtree of {u} not contiguous")
            continue
        directions = set()
        for c in children[u]:
            clo, chi, _ = spans[c]
            cpos = arr.pos[c]
            if cpos == clo:
                directions.add("right")
            elif cpos == chi:
                directions.add("left")
            else:
                problems.append(f"child {c} not at an end of its subtree interval")
        if len(directions) > 1:
            problems.append(f"children of {u} branch in different directions")
    return problems


def check_max_planar_ends(tree: FreeTree, arr: Arrangement, root: int) -> list[str]:
    """End-of-line structure of a maximum planar arrangement for n >= 3.

    The chosen root must be internal with a leaf attached, sit at one end,
    and have its leaves as the consecutive block finishing at the other end.
    """
    n = tree.n
    problems: list[str] = []
    if n <= 2:
        return problems
    if len(tree.adj[root]) < 2:
        problems.append(f"chosen root {root} is a leaf on n={n}")
        return problems
    leaves = [v for v in tree.adj[root] if len(tree.adj[v]) == 1]
    if not leaves:
        problems.append(f"chosen root {root} has no adjacent leaf")
        return problems
    problems.extend(check_max_projective_structure(RootedTree(tree, root), arr))
    return problems


def random_projective_arrangement(rt: RootedTree, rng: random.Random) -> Arrangement:
    """A uniform-ish random projective arrangement: recursive random blocks.

    Within the interval of each subtree, the root and its child blocks are
    laid out in random order; child blocks recurse. Every arrangement
    produced this way is projective.
    """
    tree = rt.tree
    children = rooted_children(rt)
    sizes = _subtree_counts(rt, children)
    pos = [0] * (tree.n + 1)
    stack = [(rt.root, 1)]
    while stack:
        u, cursor = stack.pop()
        items: list[int | None] = [None] + list(children[u])
        rng.shuffle(items)
        for item in items:
            if item is None:
                pos[u] = cursor
                cursor += 1
            else:
                stack.append((item, cursor))
                cursor += sizes[item]
    return Arrangement(pos[1:])


def _subtree_counts(rt: RootedTree, children: list[list[int]]) -> dict[int, int]:
    order = [rt.root]
    qi = 0
    while qi < len(order):
        order.extend(children[order[qi]])
        qi += 1
    counts = {u: 1 for u in order}
    for u in reversed(order):
        for c in children[u]:
            counts[u] += counts[c]
    return counts


def all_labeled_trees(n: int):
    """Every labeled tree on n vertices, via all Prüfer sequences."""
    if n == 1:
        yield FreeTree(1, [])
        return
    if n == 2:
        yield FreeTree(2, [(1, 2)])
        return
    for sequence in product(range(1, n + 1), repeat=n - 2):
        yield FreeTree(n, prufer_decode(sequence))
