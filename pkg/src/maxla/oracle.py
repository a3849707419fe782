"""Exhaustive brute-force ground truth for small trees.

The oracle enumerates all n! arrangements of a tree in lexicographic order,
evaluates every constraint directly from the definitions (pairwise crossing
test, per-position coverage counts) and reports the optimum, one witness and
the number of optima for each (constraint, objective) pair. It is the
reference every solver is differentially tested against, so it shares no
code with the solvers.

A hard guard caps the tree size at 10 vertices (10! = 3,628,800
permutations). :func:`exhaustive_report` does a single enumeration and
prices all constraints at once, including the projective optimum for every
possible root; :func:`exhaustive` answers one query from such a report.

:func:`all_free_trees` produces one representative per isomorphism class by
decoding every Prüfer sequence and deduplicating on a canonical certificate
(subtree encoding rooted at the centroid, minimized over both centroids when
two exist).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import NamedTuple

from .arrangements import Arrangement
from .generators import prufer_decode
from .trees import FreeTree

MAX_ORACLE_N = 10

CONSTRAINTS = ("unconstrained", "planar", "projective")
OBJECTIVES = ("max", "min")


class OracleResult(NamedTuple):
    cost: int
    witness: Arrangement
    count: int


@dataclass(frozen=True)
class OracleReport:
    """Every optimum of one tree, from a single enumeration.

    ``projective_max[r]`` / ``projective_min[r]`` are keyed by root vertex.
    Witnesses are the lexicographically first optimal arrangements.
    """

    n: int
    unconstrained_max: OracleResult
    unconstrained_min: OracleResult
    planar_max: OracleResult
    planar_min: OracleResult
    projective_max: dict[int, OracleResult]
    projective_min: dict[int, OracleResult]


def _guard(n: int) -> None:
    if n > MAX_ORACLE_N:
        raise ValueError(f"oracle is capped at n <= {MAX_ORACLE_N}, got {n}")


class _Best:
    """Running (best, witness, count) under > or < comparison."""

    __slots__ = ("better", "best", "witness", "count")

    def __init__(self, maximize: bool) -> None:
        self.better = (lambda a, b: a > b) if maximize else (lambda a, b: a < b)
        self.best: int | None = None
        self.witness: tuple[int, ...] | None = None
        self.count = 0

    def offer(self, value: int, perm: tuple[int, ...]) -> None:
        if self.best is None or self.better(value, self.best):
            self.best = value
            self.witness = perm
            self.count = 1
        elif value == self.best:
            self.count += 1

    def result(self) -> OracleResult:
        assert self.best is not None and self.witness is not None
        return OracleResult(self.best, Arrangement(self.witness), self.count)


def exhaustive_report(tree: FreeTree) -> OracleReport:
    """Enumerate all arrangements once and collect every optimum."""
    n = tree.n
    _guard(n)
    edges = tuple((u - 1, v - 1) for u, v in tree.edges)  # 0-based into perm
    m = len(edges)
    unc_max, unc_min = _Best(True), _Best(False)
    pla_max, pla_min = _Best(True), _Best(False)
    pro_max = {r: _Best(True) for r in range(1, n + 1)}
    pro_min = {r: _Best(False) for r in range(1, n + 1)}
    for perm in permutations(range(1, n + 1)):
        total = 0
        intervals = []
        for a, b in edges:
            pa, pb = perm[a], perm[b]
            if pa > pb:
                pa, pb = pb, pa
            total += pb - pa
            intervals.append((pa, pb))
        unc_max.offer(total, perm)
        unc_min.offer(total, perm)
        planar = True
        for i in range(m):
            lo_i, hi_i = intervals[i]
            for j in range(i + 1, m):
                lo_j, hi_j = intervals[j]
                if lo_i < lo_j < hi_i < hi_j or lo_j < lo_i < hi_j < hi_i:
                    planar = False
                    break
            if not planar:
                break
        if not planar:
            continue
        pla_max.offer(total, perm)
        pla_min.offer(total, perm)
        # coverage[p] > 0 after the prefix sum iff some edge strictly spans p
        coverage = [0] * (n + 2)
        for lo, hi in intervals:
            coverage[lo + 1] += 1
            coverage[hi] -= 1
        running = 0
        for p in range(1, n + 1):
            running += coverage[p]
            coverage[p] = running
        for r in range(1, n + 1):
            if not coverage[perm[r - 1]]:
                pro_max[r].offer(total, perm)
                pro_min[r].offer(total, perm)
    return OracleReport(
        n=n,
        unconstrained_max=unc_max.result(),
        unconstrained_min=unc_min.result(),
        planar_max=pla_max.result(),
        planar_min=pla_min.result(),
        projective_max={r: b.result() for r, b in pro_max.items()},
        projective_min={r: b.result() for r, b in pro_min.items()},
    )


def exhaustive(
    tree: FreeTree,
    constraint: str,
    objective: str,
    root: int | None = None,
) -> OracleResult:
    """Exact optimum over all arrangements satisfying ``constraint``.

    ``constraint`` is one of "unconstrained", "planar" or "projective" (the
    latter requires ``root``); ``objective`` is "max" or "min". Returns the
    optimum cost, the lexicographically first witness, and how many
    arrangements attain the optimum.
    """
    if constraint not in CONSTRAINTS:
        raise ValueError(f"unknown constraint {constraint!r}")
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}")
    if constraint == "projective":
        if root is None:
            raise ValueError("projective constraint requires a root")
        if not (1 <= root <= tree.n):
            raise ValueError(f"root {root} outside [1, {tree.n}]")
    elif root is not None:
        raise ValueError("root only applies to the projective constraint")
    report = exhaustive_report(tree)
    if constraint == "unconstrained":
        return report.unconstrained_max if objective == "max" else report.unconstrained_min
    if constraint == "planar":
        return report.planar_max if objective == "max" else report.planar_min
    table = report.projective_max if objective == "max" else report.projective_min
    return table[root]


# ---------------------------------------------------------------------------
# Free-tree shape catalogue
# ---------------------------------------------------------------------------


def _certificate(n: int, edges: list[tuple[int, int]]) -> bytes:
    """Isomorphism-invariant encoding: nested parentheses rooted at the centroid.

    With two centroids the lexicographically smaller encoding wins, so the
    certificate does not depend on labeling.
    """
    if n == 1:
        return b"()"
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    parent = [0] * (n + 1)
    order = [1]
    seen = [False] * (n + 1)
    seen[1] = True
    qi = 0
    while qi < len(order):
        u = order[qi]
        qi += 1
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                order.append(v)
    size = [1] * (n + 1)
    for i in range(len(order) - 1, 0, -1):
        v = order[i]
        size[parent[v]] += size[v]
    best = n + 1
    centroids: list[int] = []
    for u in range(1, n + 1):
        worst = 0
        for v in adj[u]:
            s = size[v] if parent[v] == u else n - size[u]
            if s > worst:
                worst = s
        if worst < best:
            best = worst
            centroids = [u]
        elif worst == best:
            centroids.append(u)
    return min(_rooted_encoding(adj, c, n) for c in centroids)


def _rooted_encoding(adj: list[list[int]], root: int, n: int) -> bytes:
    parent = [0] * (n + 1)
    parent[root] = -1
    order = [root]
    qi = 0
    while qi < len(order):
        u = order[qi]
        qi += 1
        for v in adj[u]:
            if not parent[v]:
                parent[v] = u
                order.append(v)
    label = [b""] * (n + 1)
    for i in range(len(order) - 1, -1, -1):
        u = order[i]
        children = sorted(label[v] for v in adj[u] if parent[v] == u)
        label[u] = b"(" + b"".join(children) + b")"
    return label[root]


@lru_cache(maxsize=None)
def all_free_trees(n: int) -> tuple[FreeTree, ...]:
    """One representative per isomorphism class of trees on n vertices.

    Decodes every labeled tree from its Prüfer sequence and keeps the first
    tree of each certificate. Class counts for n = 1..9 are 1, 1, 1, 2, 3,
    6, 11, 23, 47. Guarded at n <= 10; n = 10 is legal but enumerates 10^8
    sequences, so expect it to take a long time.
    """
    _guard(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return (FreeTree(1, []),)
    if n == 2:
        return (FreeTree(2, [(1, 2)]),)
    shapes: dict[bytes, FreeTree] = {}
    for sequence in product(range(1, n + 1), repeat=n - 2):
        edges = prufer_decode(sequence)
        cert = _certificate(n, edges)
        if cert not in shapes:
            shapes[cert] = FreeTree(n, edges)
    return tuple(shapes.values())
