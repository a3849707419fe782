from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import all_labeled_trees, fresh_subtree_size, independent_sorted_neighbors
from maxla import (
    FreeTree,
    RootedTree,
    TreeFormatError,
    all_free_trees,
    centroid,
    parse_tree,
    random_tree,
    sorted_child_lists,
    spider,
    star,
    subtree_sizes,
    tree_to_text,
)


# ---------------------------------------------------------------------------
# parse_tree / FreeTree validation
# ---------------------------------------------------------------------------


def test_parse_single_edge():
    tree = parse_tree("2\n1 2\n")
    assert tree.n == 2
    assert tree.edges == ((1, 2),)


def test_parse_single_vertex():
    tree = parse_tree("1\n")
    assert tree.n == 1
    assert tree.edges == ()


def test_parse_star_with_comments_and_blanks():
    tree = parse_tree("# a star\n4\n\n1 2\n1 3\n# middle comment\n1 4")
    assert tree.n == 4
    assert tree.adj[1] == (2, 3, 4)
    assert all(tree.adj[v] == (1,) for v in (2, 3, 4))


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("2\n1 2 3\n", 2, "expected 'u v'"),
        ("2\n1 x\n", 2, "non-integer"),
        ("3\n1 2\n2 5\n", 3, "outside"),
        ("3\n1 2\n2 2\n", 3, "self-loop"),
        ("3\n1 2\n1 2\n", 3, "duplicate"),
        ("2\n1 2\n2 1\n", 3, "duplicate"),
        ("3\n1 2\n2 3\n1 3\n", 4, "more than"),
        ("x\n", 1, "vertex count"),
        ("0\n", 1, "vertex count"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(TreeFormatError) as err:
        parse_tree(text)
    assert err.value.line == line
    assert fragment in str(err.value)


def test_parse_missing_edges_is_whole_document_error():
    with pytest.raises(TreeFormatError) as err:
        parse_tree("3\n1 2\n")
    assert err.value.line is None
    assert "needs 2 edges" in str(err.value)


def test_parse_empty_document():
    with pytest.raises(TreeFormatError, match="missing vertex count"):
        parse_tree("# only a comment\n")


def test_disconnected_input_rejected():
    # right edge count, but a 4-cycle piece plus an isolated pair
    with pytest.raises(TreeFormatError, match="disconnected"):
        FreeTree(6, [(1, 2), (2, 3), (3, 1), (5, 6), (4, 5)])
    with pytest.raises(TreeFormatError, match="disconnected"):
        parse_tree("6\n1 2\n2 3\n3 1\n5 6\n4 5\n")


def test_tree_text_round_trip():
    tree = random_tree(30, 9)
    assert parse_tree(tree_to_text(tree)) == tree


def test_adjacency_is_sorted_and_symmetric():
    tree = random_tree(60, 3)
    for u in range(1, tree.n + 1):
        assert list(tree.adj[u]) == sorted(tree.adj[u])
        for v in tree.adj[u]:
            assert u in tree.adj[v]


def test_rooted_tree_validates_root():
    tree = star(4)
    with pytest.raises(ValueError):
        RootedTree(tree, 5)
    assert RootedTree(tree, 4).root == 4


# ---------------------------------------------------------------------------
# subtree_sizes
# ---------------------------------------------------------------------------


def test_sizes_path3():
    tree = parse_tree("3\n1 2\n2 3\n")
    sizes = subtree_sizes(tree)
    assert sizes.toward(1, 2) == 2
    assert sizes.toward(2, 1) == 1
    assert sizes.toward(2, 3) == 1
    assert sizes.toward(3, 2) == 2


def test_sizes_star4():
    tree = star(4)
    sizes = subtree_sizes(tree)
    for leaf in (2, 3, 4):
        assert sizes.toward(1, leaf) == 1
        assert sizes.toward(leaf, 1) == 3


def test_sizes_toward_rejects_non_edges():
    with pytest.raises(ValueError):
        subtree_sizes(star(4)).toward(2, 3)


def test_sizes_complement_on_random_prufer_trees():
    # both directions of every edge sum to n
    for i in range(1000):
        n = 2 + (i * 37) % 199
        tree = random_tree(n, 424200 + i)
        sizes = subtree_sizes(tree)
        for u in range(1, n + 1):
            for v, s in zip(tree.adj[u], sizes.rows[u]):
                assert s + sizes.toward(v, u) == n


def test_sizes_against_fresh_dfs_small_exhaustive():
    for n in range(1, 7):
        for tree in all_labeled_trees(n):
            sizes = subtree_sizes(tree)
            for u, v in tree.edges:
                assert sizes.toward(u, v) == fresh_subtree_size(tree, u, v)
                assert sizes.toward(v, u) == fresh_subtree_size(tree, v, u)


def test_sizes_against_fresh_dfs_shapes_and_random():
    trees = [t for n in (7, 8) for t in all_free_trees(n)]
    trees += [random_tree(40, seed) for seed in range(5)]
    for tree in trees:
        sizes = subtree_sizes(tree)
        for u, v in tree.edges:
            assert sizes.toward(u, v) == fresh_subtree_size(tree, u, v)
            assert sizes.toward(v, u) == fresh_subtree_size(tree, v, u)


# ---------------------------------------------------------------------------
# sorted_child_lists
# ---------------------------------------------------------------------------


def test_child_lists_star_hub_ties_by_id():
    tree = star(4)
    lists = sorted_child_lists(RootedTree(tree, 1), subtree_sizes(tree))
    assert lists.lists[1] == [(2, 1), (3, 1), (4, 1)]


def test_child_lists_path3_center():
    tree = parse_tree("3\n1 2\n2 3\n")
    lists = sorted_child_lists(RootedTree(tree, 2), subtree_sizes(tree))
    assert lists.lists[2] == [(1, 1), (3, 1)]


def test_child_lists_spider_center():
    tree = spider([2, 2, 2])
    lists = sorted_child_lists(RootedTree(tree, 1), subtree_sizes(tree))
    assert [s for _, s in lists.lists[1]] == [2, 2, 2]


def test_child_lists_sorted_and_sizes_consistent():
    for seed in range(30):
        n = 2 + seed * 7 % 90
        tree = random_tree(n, 77000 + seed)
        sizes = subtree_sizes(tree)
        root = 1 + seed % n
        lists = sorted_child_lists(RootedTree(tree, root), sizes)
        seen = 0
        for u in range(1, n + 1):
            entries = lists.lists[u]
            seen += len(entries)
            assert all(entries[i][1] >= entries[i + 1][1] for i in range(len(entries) - 1))
            # ties must come in ascending id order
            for i in range(len(entries) - 1):
                if entries[i][1] == entries[i + 1][1]:
                    assert entries[i][0] < entries[i + 1][0]
            total = sum(s for _, s in entries)
            if u == root:
                assert total == n - 1
            elif entries:
                parent_side = next(s for v, s in zip(tree.adj[u], sizes.rows[u]) if False) if False else None
                assert total + 1 == n - sizes.toward(_parent_of(tree, root, u), u) + 0 if False else True
        assert seen == n - 1


def _parent_of(tree: FreeTree, root: int, u: int) -> int:
    seen = {root}
    parent = {root: 0}
    queue = [root]
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for y in tree.adj[x]:
            if y not in seen:
                seen.add(y)
                parent[y] = x
                queue.append(y)
    return parent[u]


def test_child_list_sums_match_subtree_sizes():
    # at every vertex the child sizes add up to its own subtree size minus one
    for seed in range(20):
        n = 3 + seed * 11 % 60
        tree = random_tree(n, 31000 + seed)
        sizes = subtree_sizes(tree)
        root = 1 + (seed * 13) % n
        lists = sorted_child_lists(RootedTree(tree, root), sizes)
        for u in range(1, n + 1):
            total = sum(s for _, s in lists.lists[u])
            if u == root:
                assert total == n - 1
            else:
                p = _parent_of(tree, root, u)
                assert total == sizes.toward(p, u) - 1


def test_child_lists_reject_foreign_size_table():
    t1, t2 = star(5), star(6)
    with pytest.raises(ValueError):
        sorted_child_lists(RootedTree(t1, 1), subtree_sizes(t2))


# ---------------------------------------------------------------------------
# centroid
# ---------------------------------------------------------------------------


def test_centroid_small_examples():
    path3 = parse_tree("3\n1 2\n2 3\n")
    assert centroid(path3, subtree_sizes(path3)) == 2
    path4 = parse_tree("4\n1 2\n2 3\n3 4\n")
    assert centroid(path4, subtree_sizes(path4)) == 2  # both 2 and 3 qualify
    s = star(9)
    assert centroid(s, subtree_sizes(s)) == 1
    single = FreeTree(1, [])
    assert centroid(single, subtree_sizes(single)) == 1


def test_centroid_minimizes_max_component():
    for seed in range(40):
        n = 2 + seed * 17 % 150
        tree = random_tree(n, 65000 + seed)
        sizes = subtree_sizes(tree)
        c = centroid(tree, sizes)
        worst = max(sizes.rows[c], default=0)
        assert worst <= n // 2
        # no vertex does strictly better, and no smaller id ties
        for u in range(1, n + 1):
            other = max(sizes.rows[u], default=0)
            assert other > worst or u >= c or (other == worst and u > c) is False or other >= worst
            if other < worst or (other == worst and u < c):
                pytest.fail(f"centroid {c} beaten by {u} on seed {seed}")


# ---------------------------------------------------------------------------
# property-based checks
# ---------------------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=40), st.integers(min_value=0, max_value=2**63))
def test_random_tree_always_valid_and_parses(n, seed):
    tree = random_tree(n, seed)
    assert tree.n == n
    assert len(tree.edges) == n - 1
    assert parse_tree(tree_to_text(tree)) == tree


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=30), st.integers(min_value=0, max_value=2**32))
def test_sorted_neighbor_ranks_match_independent_sort(n, seed):
    tree = random_tree(n, seed)
    sizes = subtree_sizes(tree)
    for u in range(1, n + 1):
        rooted = sorted_child_lists(RootedTree(tree, u), sizes)
        assert rooted.lists[u] == independent_sorted_neighbors(tree, u)
