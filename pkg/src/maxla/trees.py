"""Free and rooted trees on vertices 1..n, with the size tables every solver needs.

The toolkit works on two tree flavours:

  - :class:`FreeTree` — an undirected tree given by its edge set. Vertices are
    the integers 1..n. This is the universal input object.
  - :class:`RootedTree` — a free tree plus a designated root; edges are
    conceptually oriented away from the root.

On top of those, two derived structures drive the arrangement solvers:

  - :class:`SubtreeSizeTable` — for every directed edge (u, v), the number of
    vertices of the subtree hanging off v when the tree is rooted at u. Both
    directions of every edge are available, in O(n) total time and space.
  - :class:`SortedChildLists` — for a rooted tree, every vertex's children
    ordered non-increasingly by subtree size (ties broken by ascending vertex
    id). Built with a counting sort keyed on size, so construction is O(n).

All objects are immutable after construction and safe to share across
threads. Vertex ids are 1-based everywhere, including in the text format
accepted by :func:`parse_tree`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class TreeFormatError(ValueError):
    """An edge list or edge-list document failed validation.

    ``line`` is the 1-based line number in the source text when the defect is
    attributable to a specific line, and None for whole-document defects
    (wrong edge count, disconnected input).
    """

    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class FreeTree:
    """Undirected tree on vertices 1..n.

    ``adj[u]`` is a tuple with the neighbors of ``u`` in ascending order
    (``adj[0]`` is an unused sentinel so vertex ids index directly).
    ``edges`` holds the n-1 edges as (min, max) pairs in lexicographic order,
    which makes equality and hashing canonical regardless of input order.

    Construction validates everything the type promises: exactly n-1 edges,
    no self-loops, no duplicates, all endpoints in range, and connectivity.
    """

    __slots__ = ("n", "adj", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]) -> None:
        if n < 1:
            raise TreeFormatError(f"vertex count must be >= 1, got {n}")
        norm: list[tuple[int, int]] = []
        seen_edges: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise TreeFormatError(f"edge ({u}, {v}) has a vertex outside [1, {n}]")
            if u == v:
                raise TreeFormatError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen_edges:
                raise TreeFormatError(f"duplicate edge ({e[0]}, {e[1]})")
            seen_edges.add(e)
            norm.append(e)
        if len(norm) != n - 1:
            raise TreeFormatError(f"a tree on {n} vertices needs {n - 1} edges, got {len(norm)}")
        norm.sort()
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)

        raw: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in norm:
            raw[u].append(v)
            raw[v].append(u)
        # Redistribute so every adjacency list comes out ascending without a
        # per-vertex sort: visiting sources in ascending order is a counting
        # sort of the directed edges by target.
        asc: list[list[int]] = [[] for _ in range(n + 1)]
        for w in range(1, n + 1):
            for x in raw[w]:
                asc[x].append(w)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in asc)

        if n > 1:
            seen = bytearray(n + 1)
            seen[1] = 1
            queue = [1]
            qi = 0
            adj = self.adj
            while qi < len(queue):
                u = queue[qi]
                qi += 1
                for v in adj[u]:
                    if not seen[v]:
                        seen[v] = 1
                        queue.append(v)
            if len(queue) != n:
                raise TreeFormatError(
                    f"input is disconnected: reached {len(queue)} of {n} vertices"
                )

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adj[u]

    def leaves(self) -> tuple[int, ...]:
        """Vertices of degree 1 (both endpoints of a single edge; none for n=1)."""
        return tuple(u for u in range(1, self.n + 1) if len(self.adj[u]) == 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeTree):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"FreeTree(n={self.n}, edges={list(self.edges)!r})"


@dataclass(frozen=True)
class RootedTree:
    """A :class:`FreeTree` with a designated root vertex."""

    tree: FreeTree
    root: int

    def __post_init__(self) -> None:
        if not (1 <= self.root <= self.tree.n):
            raise ValueError(f"root {self.root} outside [1, {self.tree.n}]")

    @property
    def n(self) -> int:
        return self.tree.n


def parse_tree(text: str) -> FreeTree:
    """Parse the edge-list document format into a validated :class:`FreeTree`.

    Format: the first non-comment line is n; then exactly n-1 lines "u v"
    with whitespace-separated 1-based endpoints. Lines starting with '#' and
    blank lines are ignored. Raises :class:`TreeFormatError` with the
    offending line number for malformed lines, out-of-range vertices,
    self-loops, duplicate or surplus edges; whole-document defects (missing
    header, wrong edge count, disconnection) carry ``line=None``.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise TreeFormatError(f"expected vertex count, got {line!r}", lineno) from None
            if n < 1:
                raise TreeFormatError(f"vertex count must be >= 1, got {n}", lineno)
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise TreeFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise TreeFormatError(f"non-integer endpoint in {line!r}", lineno) from None
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise TreeFormatError(f"edge ({u}, {v}) has a vertex outside [1, {n}]", lineno)
        if u == v:
            raise TreeFormatError(f"self-loop at vertex {u}", lineno)
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise TreeFormatError(f"duplicate edge ({e[0]}, {e[1]})", lineno)
        if len(edges) == n - 1:
            raise TreeFormatError(f"more than {n - 1} edges for {n} vertices", lineno)
        seen.add(e)
        edges.append(e)
    if n is None:
        raise TreeFormatError("empty document: missing vertex count")
    if len(edges) != n - 1:
        raise TreeFormatError(f"a tree on {n} vertices needs {n - 1} edges, got {len(edges)}")
    return FreeTree(n, edges)


def tree_to_text(tree: FreeTree) -> str:
    """Serialize a tree in the format accepted by :func:`parse_tree`."""
    lines = [str(tree.n)]
    lines.extend(f"{u} {v}" for u, v in tree.edges)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True, eq=False)
class SubtreeSizeTable:
    """Subtree sizes for every directed edge of a free tree.

    ``rows`` is aligned with ``tree.adj``: ``rows[u][i]`` is the size of the
    subtree rooted at ``tree.adj[u][i]`` when the tree is rooted at ``u``.
    For every edge uv the two directions sum to n. Rows are plain lists for
    construction speed at large n; they are filled once and read-only after.
    """

    tree: FreeTree
    rows: list[list[int]]

    @property
    def n(self) -> int:
        return self.tree.n

    def toward(self, u: int, v: int) -> int:
        """Size of the subtree hanging off v as seen from its neighbor u."""
        try:
            i = self.tree.adj[u].index(v)
        except ValueError:
            raise ValueError(f"({u}, {v}) is not an edge") from None
        return self.rows[u][i]


@dataclass(frozen=True, eq=False)
class SortedChildLists:
    """Per-vertex children of a rooted tree, sorted non-increasingly by size.

    ``lists[u]`` holds (child, size) pairs; the parent of ``u`` never appears.
    Ties are broken by ascending child id so outputs are reproducible.
    Filled once at construction and read-only after.
    """

    root: int
    lists: list[list[tuple[int, int]]]


def _bfs_order_and_parents(tree: FreeTree, start: int) -> tuple[list[int], list[int]]:
    """Breadth-first vertex order from ``start`` and the parent of each vertex.

    The parent array doubles as the visited set (the start vertex gets -1,
    callers should treat it as "no parent"). Iterative on purpose: inputs
    may be path trees with n in the millions, so no recursion anywhere in
    this module.
    """
    adj = tree.adj
    parent = [0] * (tree.n + 1)
    parent[start] = -1
    queue = [start]
    push = queue.append
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        for v in adj[u]:
            if not parent[v]:
                parent[v] = u
                push(v)
    return queue, parent


def subtree_sizes(tree: FreeTree) -> SubtreeSizeTable:
    """Compute s_u(v) for every directed edge (u, v) in O(n) time and space.

    One traversal rooted at vertex 1 gives every child-direction size; the
    opposite direction of an edge is n minus the child-direction size.
    """
    n = tree.n
    adj = tree.adj
    order, parent = _bfs_order_and_parents(tree, 1)
    size = [1] * (n + 1)
    for i in range(len(order) - 1, 0, -1):
        v = order[i]
        size[parent[v]] += size[v]
    # Every neighbor of u except its parent is a child, so gather child sizes
    # branch-free and patch the single parent slot afterwards.
    rows: list[list[int]] = []
    append_row = rows.append
    for u in range(n + 1):
        au = adj[u]
        row = [size[v] for v in au]
        p = parent[u]
        if p > 0:
            row[au.index(p)] = n - size[u]
        append_row(row)
    return SubtreeSizeTable(tree=tree, rows=rows)


def sorted_child_lists(rt: RootedTree, sizes: SubtreeSizeTable) -> SortedChildLists:
    """Build the size-sorted child lists of ``rt`` from a size table.

    A single counting sort keyed on subtree size (range [1, n-1]) orders all
    children at once, keeping the whole construction O(n). Children of equal
    size stay in ascending id order.
    """
    tree = rt.tree
    if sizes.tree is not tree and sizes.tree != tree:
        raise ValueError("size table was computed for a different tree")
    n = tree.n
    root = rt.root
    adj = tree.adj
    rows = sizes.rows
    parent = [0] * (n + 1)
    child_size = [0] * (n + 1)
    seen = bytearray(n + 1)
    seen[root] = 1
    queue = [root]
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        for v, s in zip(adj[u], rows[u]):
            if not seen[v]:
                seen[v] = 1
                parent[v] = u
                child_size[v] = s
                queue.append(v)
    # Counting sort keyed on size, emitted high-to-low; offsets into one flat
    # order array instead of per-key buckets (kinder to the allocator at
    # large n). Ascending-id placement within a key is the documented tie
    # order.
    count = [0] * (n + 1)
    for v in range(1, n + 1):
        if v != root:
            count[child_size[v]] += 1
    offset = [0] * (n + 1)
    running = 0
    for s in range(n - 1, 0, -1):
        offset[s] = running
        running += count[s]
    order = [0] * (n - 1) if n > 1 else []
    for v in range(1, n + 1):
        if v != root:
            s = child_size[v]
            p = offset[s]
            offset[s] = p + 1
            order[p] = v
    lists: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    for v in order:
        lists[parent[v]].append((v, child_size[v]))
    return SortedChildLists(root=root, lists=lists)


def centroid(tree: FreeTree, sizes: SubtreeSizeTable) -> int:
    """A centroidal vertex: minimizes the largest component left by its removal.

    Trees have one or two centroids; when two exist the one with the smaller
    id is returned. The maximum component size at the returned vertex is at
    most floor(n/2).
    """
    best_vertex = 1
    best_max = tree.n  # every component has < n vertices
    rows = sizes.rows
    for u in range(1, tree.n + 1):
        row = rows[u]
        m = max(row) if row else 0
        if m < best_max:
            best_max = m
            best_vertex = u
    return best_vertex
