"""Deterministic test-tree generation: named families and seeded random trees.

Random trees are sampled uniformly over labeled trees by decoding a random
Prüfer sequence. The randomness comes from SplitMix64 (Steele, Lea & Flood,
"Fast splittable pseudorandom number generators", 2014) rather than the
stdlib generator so that a given (n, seed) pair produces the identical tree
on every platform and interpreter version. Bounded draws reduce the raw
64-bit output by plain modulo; the bias is negligible for test data and
keeps the draw sequence simple to reproduce elsewhere.

Family labelings are fixed and documented per constructor, so generated
files are byte-identical across runs.
"""

from __future__ import annotations

from typing import Sequence

from .trees import FreeTree

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: 64-bit state advanced by the golden-ratio increment.

    next_u64: state += 0x9E3779B97F4A7C15; z = state;
              z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
              z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
              return z ^ (z >> 31)             (all arithmetic mod 2^64)
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound) via modulo reduction."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        return self.next_u64() % bound


def prufer_decode(sequence: Sequence[int]) -> list[tuple[int, int]]:
    """Edges of the labeled tree on len(sequence) + 2 vertices for a Prüfer sequence.

    Classic pointer-scan decode, O(n): repeatedly join the smallest current
    leaf to the next sequence value. The resulting degrees satisfy
    degree(v) = 1 + multiplicity of v in the sequence.
    """
    n = len(sequence) + 2
    degree = [1] * (n + 1)
    for x in sequence:
        if not (1 <= x <= n):
            raise ValueError(f"sequence value {x} outside [1, {n}]")
        degree[x] += 1
    edges: list[tuple[int, int]] = []
    ptr = 1
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in sequence:
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n))
    return edges


def random_tree(n: int, seed: int) -> FreeTree:
    """Uniform random labeled tree; identical for identical (n, seed)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return FreeTree(1, [])
    if n == 2:
        return FreeTree(2, [(1, 2)])
    rng = SplitMix64(seed)
    sequence = [1 + rng.below(n) for _ in range(n - 2)]
    return FreeTree(n, prufer_decode(sequence))


def star(n: int) -> FreeTree:
    """Hub 1 joined to leaves 2..n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return FreeTree(n, [(1, i) for i in range(2, n + 1)])


def path(n: int) -> FreeTree:
    """Vertices 1..n in a line."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return FreeTree(n, [(i, i + 1) for i in range(1, n)])


def bistar(n: int, hub_leaves: tuple[int, int] | None = None) -> FreeTree:
    """Adjacent hubs 1 and 2 carrying ``hub_leaves`` leaves each.

    Defaults to the balanced split (ceil((n-2)/2), floor((n-2)/2)). Hub 1
    gets leaves 3..2+h1, hub 2 the rest.
    """
    if n < 2:
        raise ValueError(f"bistar needs n >= 2, got {n}")
    if hub_leaves is None:
        hub_leaves = ((n - 1) // 2, (n - 2) // 2)
    h1, h2 = hub_leaves
    if h1 < 0 or h2 < 0 or h1 + h2 + 2 != n:
        raise ValueError(f"hub leaf counts {hub_leaves} inconsistent with n={n}")
    edges = [(1, 2)]
    edges.extend((1, i) for i in range(3, 3 + h1))
    edges.extend((2, i) for i in range(3 + h1, n + 1))
    return FreeTree(n, edges)


def quasistar(n: int) -> FreeTree:
    """A star with one subdivided edge: hub 1, spike 1-2-3, leaves 4..n on the hub."""
    if n < 3:
        raise ValueError(f"quasistar needs n >= 3, got {n}")
    edges = [(1, 2), (2, 3)]
    edges.extend((1, i) for i in range(4, n + 1))
    return FreeTree(n, edges)


def caterpillar(leaf_counts: Sequence[int]) -> FreeTree:
    """Backbone path 1..k with leaf_counts[i] leaves hanging off vertex i+1.

    Leaves are numbered k+1, k+2, ... along the backbone.
    """
    k = len(leaf_counts)
    if k < 1:
        raise ValueError("caterpillar needs a non-empty backbone")
    if any(c < 0 for c in leaf_counts):
        raise ValueError(f"negative leaf count in {list(leaf_counts)}")
    edges = [(i, i + 1) for i in range(1, k)]
    nxt = k + 1
    for i, count in enumerate(leaf_counts, 1):
        for _ in range(count):
            edges.append((i, nxt))
            nxt += 1
    return FreeTree(nxt - 1, edges)


def spider(leg_lengths: Sequence[int]) -> FreeTree:
    """Center 1 with one path of each given length attached.

    Leg vertices are numbered consecutively, one leg at a time.
    """
    if any(length < 1 for length in leg_lengths):
        raise ValueError(f"leg lengths must be >= 1, got {list(leg_lengths)}")
    edges: list[tuple[int, int]] = []
    nxt = 2
    for length in leg_lengths:
        prev = 1
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return FreeTree(nxt - 1, edges)


def random_caterpillar(n: int, seed: int) -> FreeTree:
    """Seeded caterpillar: random backbone length, leaves scattered uniformly."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = SplitMix64(seed)
    k = 1 + rng.below(n)
    counts = [0] * k
    for _ in range(n - k):
        counts[rng.below(k)] += 1
    return caterpillar(counts)


def make_family(
    kind: str,
    n: int | None = None,
    *,
    hub_leaves: tuple[int, int] | None = None,
    leaf_counts: Sequence[int] | None = None,
    leg_lengths: Sequence[int] | None = None,
) -> FreeTree:
    """Dispatch a named family, validating parameter consistency.

    ``n`` is required for star/path/bistar/quasistar; for caterpillar and
    spider it is optional and, when given, checked against the size implied
    by the parameters.
    """
    if kind in ("star", "path", "bistar", "quasistar"):
        if n is None:
            raise ValueError(f"{kind} requires n")
        if kind == "star":
            return star(n)
        if kind == "path":
            return path(n)
        if kind == "bistar":
            return bistar(n, hub_leaves)
        return quasistar(n)
    if kind == "caterpillar":
        if leaf_counts is None:
            raise ValueError("caterpillar requires leaf_counts")
        tree = caterpillar(leaf_counts)
    elif kind == "spider":
        if leg_lengths is None:
            raise ValueError("spider requires leg_lengths")
        tree = spider(leg_lengths)
    else:
        raise ValueError(f"unknown family {kind!r}")
    if n is not None and tree.n != n:
        raise ValueError(f"{kind} parameters imply n={tree.n}, but n={n} was given")
    return tree
