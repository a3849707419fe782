"""Linear arrangements: positions on a line, cost, and the validity predicates.

A linear arrangement of an n-vertex tree is a bijection from vertices to the
positions 1..n. Drawing the vertices on a horizontal line and the edges as
semicircles above it gives the usual one-page picture:

  - the length of edge uv is ``|pos(u) - pos(v)``|, and the cost of an
    arrangement is the sum of all edge lengths;
  - two edges cross when their position intervals interleave strictly
    (edges sharing an endpoint never cross);
  - an arrangement is *planar* when no two edges cross, and *projective*
    (for a rooted tree) when it is planar and no edge covers the root's
    position.

The predicates here are deliberately simple reference implementations
(pairwise O(m^2) crossing test); solvers never call them, validators and
tests do.
"""

from __future__ import annotations

from typing import Sequence

from .trees import FreeTree, RootedTree


class Arrangement:
    """A bijection vertex -> position in [1, n], with its inverse.

    ``pos[v]`` is the position of vertex v and ``inv[p]`` the vertex at
    position p (index 0 of both is an unused sentinel). Both directions are
    stored eagerly and validated on construction; instances are immutable.
    """

    __slots__ = ("n", "pos", "inv")

    def __init__(self, positions: Sequence[int]) -> None:
        n = len(positions)
        inv = [0] * (n + 1)
        for v, p in enumerate(positions, 1):
            if not (1 <= p <= n):
                raise ValueError(f"position {p} of vertex {v} outside [1, {n}]")
            if inv[p]:
                raise ValueError(f"vertices {inv[p]} and {v} both at position {p}")
            inv[p] = v
        self.n = n
        self.pos: tuple[int, ...] = (0,) + tuple(positions)
        self.inv: tuple[int, ...] = tuple(inv)

    @classmethod
    def identity(cls, n: int) -> Arrangement:
        return cls(range(1, n + 1))

    def position_of(self, v: int) -> int:
        return self.pos[v]

    def vertex_at(self, p: int) -> int:
        return self.inv[p]

    def to_text_line(self) -> str:
        """Single line "pos(1) pos(2) ... pos(n)", space-separated."""
        return " ".join(map(str, self.pos[1:]))

    @classmethod
    def from_text_line(cls, text: str) -> Arrangement:
        try:
            positions = [int(token) for token in text.split()]
        except ValueError:
            raise ValueError(f"non-integer field in arrangement line {text!r}") from None
        return cls(positions)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "position": list(self.pos[1:])}

    @classmethod
    def from_json_dict(cls, data: dict) -> Arrangement:
        positions = data["position"]
        if data.get("n", len(positions)) != len(positions):
            raise ValueError("arrangement JSON: 'n' does not match 'position' length")
        return cls(positions)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Arrangement):
            return NotImplemented
        return self.pos == other.pos

    def __hash__(self) -> int:
        return hash(self.pos)

    def __repr__(self) -> str:
        return f"Arrangement({list(self.pos[1:])!r})"


def reverse(arr: Arrangement) -> Arrangement:
    """Mirror image: position p becomes n + 1 - p. Cost and planarity invariant."""
    n = arr.n
    return Arrangement([n + 1 - p for p in arr.pos[1:]])


def _check_sizes(tree: FreeTree, arr: Arrangement) -> None:
    if tree.n != arr.n:
        raise ValueError(f"tree has {tree.n} vertices but arrangement has {arr.n}")


def cost(tree: FreeTree, arr: Arrangement) -> int:
    """Sum of all edge lengths of ``tree`` under ``arr``."""
    _check_sizes(tree, arr)
    pos = arr.pos
    total = 0
    for u, v in tree.edges:
        d = pos[u] - pos[v]
        total += d if d > 0 else -d
    return total


def _edge_intervals(tree: FreeTree, arr: Arrangement) -> list[tuple[int, int]]:
    pos = arr.pos
    intervals = []
    for u, v in tree.edges:
        pu, pv = pos[u], pos[v]
        intervals.append((pu, pv) if pu < pv else (pv, pu))
    return intervals


def is_planar(tree: FreeTree, arr: Arrangement) -> bool:
    """True when no two edges cross (strict interleaving of their intervals).

    Pairwise O(m^2) reference test. Each edge is normalized to its
    (low, high) position pair first; for intervals sorted by low endpoint,
    a crossing is exactly low_i < low_j < high_i < high_j. Edges sharing an
    endpoint never satisfy the strict chain, so they never count as crossing.
    """
    _check_sizes(tree, arr)
    intervals = sorted(_edge_intervals(tree, arr))
    m = len(intervals)
    for i in range(m):
        lo_i, hi_i = intervals[i]
        for j in range(i + 1, m):
            lo_j, hi_j = intervals[j]
            if lo_j >= hi_i:
                break  # sorted by low endpoint: later intervals start even further right
            if lo_i < lo_j and hi_i < hi_j:
                return False
    return True


def is_projective(rt: RootedTree, arr: Arrangement) -> bool:
    """True when the arrangement is planar and no edge covers the root.

    An edge uv covers a vertex w strictly between its endpoints' positions;
    the root being an endpoint of an edge is never covered by it.
    """
    _check_sizes(rt.tree, arr)
    root_pos = arr.pos[rt.root]
    for lo, hi in _edge_intervals(rt.tree, arr):
        if lo < root_pos < hi:
            return False
    return is_planar(rt.tree, arr)
