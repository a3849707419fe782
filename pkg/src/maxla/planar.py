"""Linear-time planar maximum arrangements, plus the companion minimum solver.

A maximum planar arrangement of a free tree is a maximum projective
arrangement of the same tree rooted at the right vertex, so the whole
problem reduces to finding a root that maximizes the projective optimum.
Scanning all n rootings costs O(n^2) (:func:`max_planar_reference`, kept as
the differential-testing baseline). The linear algorithm exploits a local
exchange identity: for any edge uv,

    maxcost(rooted at v) - maxcost(rooted at u) = f(v, u) - f(u, v)

where f(u, v) = (deg(u) - j) * s_u(v) + (s^1_u + ... + s^j_u), j is the rank
of v among u's neighbors ordered non-increasingly by subtree size, and s^i_u
is the i-th largest of those sizes. Every quantity in f is precomputed into
an :class:`EdgeRecordTable`, one record per directed edge, so a breadth-first
sweep prices every rooting in O(1) per edge after a single O(n) projective
cost evaluation at the start vertex.

Leaves are never expanded during the sweep: a leaf's rooting is worth
exactly its neighbor's (the two optimal arrangements are mirror images), and
an optimal root is always a leaf or a vertex with a leaf attached. The
returned root is therefore the smallest-id internal vertex attaining the
maximum (vertex 1 for n <= 2).

Caterpillars get a dedicated constructor: the classic graceful layout along
the backbone reaches the global optimum n(n-1)/2 with every edge length
distinct. The companion :func:`min_planar` roots the tree at a centroid and
solves the projective minimization there.
"""

from __future__ import annotations

from typing import NamedTuple

from .arrangements import Arrangement, cost
from .projective import max_projective, max_projective_cost, min_projective
from .trees import (
    FreeTree,
    RootedTree,
    SubtreeSizeTable,
    centroid,
    subtree_sizes,
)


class EdgeRecord(NamedTuple):
    """One directed edge (u, v) as seen from u's sorted neighbor list."""

    neighbor: int  # v
    size: int  # s_u(v)
    index: int  # 1-based rank of v among u's neighbors (non-increasing size)
    reciprocal_index: int  # 1-based rank of u among v's neighbors
    prefix: int  # s^1_u + ... + s^index_u, the partial sum through this rank


class EdgeRecordTable:
    """Records for every directed edge, sorted per vertex by subtree size.

    Stored flat in vertex-major order to keep the footprint and build time
    linear even at millions of vertices: vertex u owns slots
    ``start[u] .. start[u+1] - 1`` of the parallel arrays ``neighbor``,
    ``size``, ``reciprocal`` and ``prefix``; the slot at 1-based rank j in
    u's block describes u's j-th largest neighbor subtree. Within a block
    sizes are non-increasing with ascending-id tie order.

    Reciprocity links the two directions of every edge: the slot for (u, v)
    stores the rank that the slot for (v, u) occupies in v's block, and vice
    versa. All arrays are filled once at construction and read-only after.
    """

    __slots__ = ("n", "start", "neighbor", "size", "reciprocal", "prefix", "_rank")

    def __init__(
        self,
        n: int,
        start: list[int],
        neighbor: list[int],
        size: list[int],
        reciprocal: list[int],
        prefix: list[int],
    ) -> None:
        self.n = n
        self.start = start  # length n + 2; start[u + 1] - start[u] = degree(u)
        self.neighbor = neighbor
        self.size = size
        self.reciprocal = reciprocal
        self.prefix = prefix
        self._rank: dict[tuple[int, int], int] | None = None

    def degree(self, u: int) -> int:
        return self.start[u + 1] - self.start[u]

    def record(self, u: int, rank: int) -> EdgeRecord:
        """The record at 1-based ``rank`` in u's block."""
        if not (1 <= rank <= self.degree(u)):
            raise IndexError(f"vertex {u} has no record at rank {rank}")
        slot = self.start[u] + rank - 1
        return EdgeRecord(
            self.neighbor[slot], self.size[slot], rank, self.reciprocal[slot], self.prefix[slot]
        )

    def records(self, u: int) -> list[EdgeRecord]:
        return [self.record(u, rank) for rank in range(1, self.degree(u) + 1)]

    def rank_of(self, u: int, v: int) -> int:
        """1-based rank of neighbor v in u's block; ValueError for non-edges.

        The reverse lookup is materialized on first use (O(n) once, O(1)
        after); rebuilding it twice under concurrency is harmless since the
        content is identical.
        """
        table = self._rank
        if table is None:
            table = {}
            start = self.start
            neighbor = self.neighbor
            for u_ in range(1, self.n + 1):
                base = start[u_]
                for slot in range(base, start[u_ + 1]):
                    table[(u_, neighbor[slot])] = slot - base + 1
            self._rank = table
        try:
            return table[(u, v)]
        except KeyError:
            raise ValueError(f"({u}, {v}) is not an edge") from None


def build_edge_records(tree: FreeTree, sizes: SubtreeSizeTable) -> EdgeRecordTable:
    """Build the :class:`EdgeRecordTable` in O(n) total.

    One global counting sort orders all 2(n-1) directed edges by subtree
    size (key range [1, n-1], offsets placed high-to-low into a flat array;
    no per-key containers, which matters for the allocator at millions of
    vertices). A first pass over that order fills each slot's neighbor, size
    and prefix, and queues the reciprocal rank under the opposite
    direction's sort key (n - size). The queue is placed by the same offset
    technique, which is the second counting sort; because both orders agree
    (stable, ascending-id ties), the t-th queued entry for a vertex lands in
    its t-th slot.
    """
    n = tree.n
    adj = tree.adj
    start = [0] * (n + 2)
    for u in range(1, n + 1):
        start[u + 1] = start[u] + len(adj[u])
    total = start[n + 1]  # 2(n - 1)
    # Directed edges flattened in vertex-major order (u asc, v asc), which
    # fixes the tie order of both counting sorts.
    flat_dst = [v for row in adj for v in row]
    flat_size = [s for row in sizes.rows for s in row]
    src = [0] * total
    for u in range(1, n + 1):
        lo, hi = start[u], start[u + 1]
        if lo != hi:
            src[lo:hi] = [u] * (hi - lo)
    # Key counts are symmetric under s -> n - s (every edge contributes both
    # directions), so one histogram serves both counting sorts.
    count = [0] * (n + 1)
    for s in flat_size:
        count[s] += 1
    offset = [0] * (n + 1)
    running = 0
    for s in range(n - 1, 0, -1):
        offset[s] = running
        running += count[s]
    by_size = [0] * total
    cursor = offset[:]
    for eid, s in enumerate(flat_size):
        p = cursor[s]
        cursor[s] = p + 1
        by_size[p] = eid
    neighbor = [0] * total
    size_arr = [0] * total
    reciprocal = [0] * total
    prefix = [0] * total
    queued_vertex = [0] * total
    queued_rank = [0] * total
    fill = list(start)
    cursor = offset[:]
    for eid in by_size:
        u = src[eid]
        s = flat_size[eid]
        slot = fill[u]
        fill[u] = slot + 1
        base = start[u]
        v = flat_dst[eid]
        neighbor[slot] = v
        size_arr[slot] = s
        prefix[slot] = s + (prefix[slot - 1] if slot > base else 0)
        q = cursor[n - s]
        cursor[n - s] = q + 1
        queued_vertex[q] = v
        queued_rank[q] = slot - base + 1
    fill = list(start)
    for a, rank in zip(queued_vertex, queued_rank):
        slot = fill[a]
        fill[a] = slot + 1
        reciprocal[slot] = rank
    return EdgeRecordTable(n, start, neighbor, size_arr, reciprocal, prefix)


def projective_delta(u: int, v: int, records: EdgeRecordTable) -> int:
    """maxcost(rooted at v) - maxcost(rooted at u), in O(1) from the records.

    Evaluates f(v, u) - f(u, v) with f(u, v) = (deg(u) - j) * s_u(v) +
    prefix_u(j), where j is v's rank in u's list.
    """
    rank_uv = records.rank_of(u, v)
    start = records.start
    slot_uv = start[u] + rank_uv - 1
    rank_vu = records.reciprocal[slot_uv]
    slot_vu = start[v] + rank_vu - 1
    deg_u = start[u + 1] - start[u]
    deg_v = start[v + 1] - start[v]
    size = records.size
    prefix = records.prefix
    f_uv = (deg_u - rank_uv) * size[slot_uv] + prefix[slot_uv]
    f_vu = (deg_v - rank_vu) * size[slot_vu] + prefix[slot_vu]
    return f_vu - f_uv


def find_optimal_root(
    tree: FreeTree,
    *,
    sizes: SubtreeSizeTable | None = None,
    records: EdgeRecordTable | None = None,
) -> tuple[int, int]:
    """A vertex maximizing the projective optimum over all rootings, and that cost.

    The sweep starts at the smallest-id internal vertex w and prices every
    other internal rooting in O(1) per edge relative to w. The absolute
    value at w comes from the records as well: summing every prefix gives
    the sum over all vertices of their full-neighborhood layout cost, and
    subtracting f(v, parent of v) for every non-root vertex removes exactly
    the parent entries that are not children in the rooted tree. The f
    values for internal vertices fall out of the sweep itself; every leaf
    contributes n - 1.

    Leaves are skipped: rooting at a leaf is worth the same as rooting at
    its neighbor, so the maximum over internal vertices is the global
    maximum. Ties resolve to the smallest vertex id among internal vertices
    (vertex 1 when n <= 2, where everything is a leaf).
    """
    n = tree.n
    if n <= 2:
        return 1, n - 1
    if sizes is None:
        sizes = subtree_sizes(tree)
    if records is None:
        records = build_edge_records(tree, sizes)
    adj = tree.adj
    w = 0
    for u in range(1, n + 1):
        if len(adj[u]) > 1:
            w = u
            break
    start = records.start
    neighbor = records.neighbor
    size = records.size
    reciprocal = records.reciprocal
    prefix = records.prefix
    # delta[v] = D(rooted at v) - D(rooted at w); upward_f accumulates
    # f(v, parent of v) over all internal non-root vertices.
    delta = [0] * (n + 1)
    visited = bytearray(n + 1)
    visited[w] = 1
    upward_f = 0
    queue = [w]
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        base = start[u]
        after = start[u + 1]
        deg_u = after - base
        d_u = delta[u]
        for slot in range(base, after):
            v = neighbor[slot]
            if not visited[v]:
                v_base = start[v]
                deg_v = start[v + 1] - v_base
                if deg_v > 1:
                    rank_vu = reciprocal[slot]
                    slot_vu = v_base + rank_vu - 1
                    f_uv = (deg_u - (slot - base + 1)) * size[slot] + prefix[slot]
                    f_vu = (deg_v - rank_vu) * size[slot_vu] + prefix[slot_vu]
                    visited[v] = 1
                    delta[v] = d_u + f_vu - f_uv
                    upward_f += f_vu
                    queue.append(v)
    leaf_count = n - len(queue)
    value_w = sum(prefix) - upward_f - leaf_count * (n - 1)
    best_vertex = w
    best = 0
    for u in queue:
        if delta[u] > best or (delta[u] == best and u < best_vertex):
            best = delta[u]
            best_vertex = u
    return best_vertex, value_w + best


def _max_projective_from_records(
    tree: FreeTree, records: EdgeRecordTable, root: int
) -> tuple[Arrangement, int]:
    """Maximum projective layout driven straight off the record table.

    Each vertex's record block is already its full neighborhood in sorted
    order, so skipping the parent entry (carried on the worklist) walks
    exactly the sorted child list with identical ordering and tie-breaks.
    Produces the same arrangement as :func:`maxla.projective.max_projective`
    on the same rooting, one structure cheaper; the equivalence is pinned by
    tests.
    """
    n = tree.n
    start = records.start
    neighbor = records.neighbor
    size = records.size
    pos = [0] * (n + 1)
    stack: list[tuple[int, int, bool, int, int]] = [(root, 0, True, 1, n)]
    push = stack.append
    while stack:
        u, parent, rightward, a, b = stack.pop()
        lo, hi = start[u], start[u + 1]
        if rightward:
            pos[u] = b
            cursor = b - 1
            for slot in range(lo, hi):
                v = neighbor[slot]
                if v != parent:
                    nv = size[slot]
                    push((v, u, False, cursor - nv + 1, cursor))
                    cursor -= nv
        else:
            pos[u] = a
            cursor = a + 1
            for slot in range(lo, hi):
                v = neighbor[slot]
                if v != parent:
                    nv = size[slot]
                    push((v, u, True, cursor, cursor + nv - 1))
                    cursor += nv
    arr = Arrangement(pos[1:])
    return arr, cost(tree, arr)


def max_planar(tree: FreeTree) -> tuple[Arrangement, int]:
    """A maximum planar arrangement of ``tree`` and its cost.

    Finds an optimal root with the linear sweep, then lays out the maximum
    projective arrangement rooted there. The reported cost is recomputed
    from the arrangement itself.
    """
    sizes = subtree_sizes(tree)
    records = build_edge_records(tree, sizes)
    root, _ = find_optimal_root(tree, sizes=sizes, records=records)
    return _max_projective_from_records(tree, records, root)


def max_planar_reference(tree: FreeTree) -> int:
    """O(n^2) baseline: the best projective cost over all n rootings.

    Exists solely as the differential-testing reference for the linear
    algorithm; do not call it on large inputs.
    """
    sizes = subtree_sizes(tree)
    best = 0
    for u in range(1, tree.n + 1):
        rooted = RootedTree(tree, u)
        value = max_projective_cost(rooted, sizes=sizes)
        if value > best:
            best = value
    return best


def optimal_root_candidates(tree: FreeTree) -> set[int]:
    """Internal vertices with at least one leaf attached.

    Some member of this set, or one of its adjacent leaves, is always an
    optimal root for the planar maximization (a testing aid, not a solver
    shortcut: the full sweep remains necessary to pick among them). For the
    single-edge tree there is no internal vertex; vertex 1 is returned as the
    canonical candidate since both endpoints are optimal.
    """
    n = tree.n
    if n < 2:
        raise ValueError("candidate roots need at least one edge")
    if n == 2:
        return {1}
    adj = tree.adj
    return {
        u
        for u in range(1, n + 1)
        if len(adj[u]) > 1 and any(len(adj[v]) == 1 for v in adj[u])
    }


def is_caterpillar(tree: FreeTree) -> bool:
    """True when removing all leaves yields a (possibly empty) path."""
    adj = tree.adj
    internal = [u for u in range(1, tree.n + 1) if len(adj[u]) > 1]
    for u in internal:
        internal_neighbors = sum(1 for v in adj[u] if len(adj[v]) > 1)
        if internal_neighbors > 2:
            return False
    return True


def _backbone(tree: FreeTree) -> list[int]:
    """Backbone of a caterpillar: its internal vertices in path order.

    Empty for n <= 2. The walk starts at the backbone endpoint with the
    smaller id so outputs are reproducible.
    """
    adj = tree.adj
    internal = [u for u in range(1, tree.n + 1) if len(adj[u]) > 1]
    if not internal:
        return []
    if len(internal) == 1:
        return internal
    ends = [
        u for u in internal if sum(1 for v in adj[u] if len(adj[v]) > 1) == 1
    ]
    walk = [min(ends)]
    prev = 0
    while True:
        nxt = 0
        for v in adj[walk[-1]]:
            if v != prev and len(adj[v]) > 1:
                nxt = v
                break
        if not nxt:
            break
        prev = walk[-1]
        walk.append(nxt)
    return walk


def max_planar_caterpillar(tree: FreeTree) -> tuple[Arrangement, int]:
    """Graceful layout of a caterpillar: cost n(n-1)/2, all edge lengths distinct.

    Walks the backbone alternating ends of the line: the first backbone
    vertex takes the leftmost free position and its leaves the rightmost
    ones, the next backbone vertex the rightmost free position and its
    leaves the leftmost, and so on until the line is full. Every placement
    shrinks the free span by one, so the edge lengths run down n-1, n-2, ...
    1 with no repeats. Raises ValueError on non-caterpillar input.
    """
    if not is_caterpillar(tree):
        raise ValueError("input is not a caterpillar")
    n = tree.n
    adj = tree.adj
    pos = [0] * (n + 1)
    if n == 1:
        pos[1] = 1
    elif n == 2:
        pos[1], pos[2] = 1, 2
    else:
        left, right = 1, n
        on_left = True
        for b in _backbone(tree):
            leaf_block = [v for v in adj[b] if len(adj[v]) == 1]
            if on_left:
                pos[b] = left
                left += 1
                for leaf in leaf_block:
                    pos[leaf] = right
                    right -= 1
            else:
                pos[b] = right
                right -= 1
                for leaf in leaf_block:
                    pos[leaf] = left
                    left += 1
            on_left = not on_left
    arr = Arrangement(pos[1:])
    return arr, cost(tree, arr)


def min_planar(tree: FreeTree) -> tuple[Arrangement, int]:
    """A minimum planar arrangement: the projective minimum rooted at a centroid.

    When two centroids exist the smaller id is used; both give the same cost.
    """
    sizes = subtree_sizes(tree)
    root = centroid(tree, sizes)
    return min_projective(RootedTree(tree, root), sizes=sizes)
