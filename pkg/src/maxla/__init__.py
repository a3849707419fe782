"""maxla — maximum and minimum linear arrangements of trees, in linear time.

Solvers for the planarity- and projectivity-constrained variants of the
maximum linear arrangement problem on trees, their minimization companions,
exhaustive brute-force oracles for differential testing, validity checkers,
deterministic tree generators, and a command-line front end.
"""

from .arrangements import Arrangement, cost, is_planar, is_projective, reverse
from .generators import (
    SplitMix64,
    bistar,
    caterpillar,
    make_family,
    path,
    prufer_decode,
    quasistar,
    random_caterpillar,
    random_tree,
    spider,
    star,
)
from .oracle import (
    MAX_ORACLE_N,
    OracleReport,
    OracleResult,
    all_free_trees,
    exhaustive,
    exhaustive_report,
)
from .planar import (
    EdgeRecord,
    EdgeRecordTable,
    build_edge_records,
    find_optimal_root,
    is_caterpillar,
    max_planar,
    max_planar_caterpillar,
    max_planar_reference,
    min_planar,
    optimal_root_candidates,
    projective_delta,
)
from .projective import max_projective, max_projective_cost, min_projective
from .trees import (
    FreeTree,
    RootedTree,
    SortedChildLists,
    SubtreeSizeTable,
    TreeFormatError,
    centroid,
    parse_tree,
    sorted_child_lists,
    subtree_sizes,
    tree_to_text,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "EdgeRecord",
    "EdgeRecordTable",
    "FreeTree",
    "MAX_ORACLE_N",
    "OracleReport",
    "OracleResult",
    "RootedTree",
    "SortedChildLists",
    "SplitMix64",
    "SubtreeSizeTable",
    "TreeFormatError",
    "all_free_trees",
    "bistar",
    "build_edge_records",
    "caterpillar",
    "centroid",
    "cost",
    "exhaustive",
    "exhaustive_report",
    "find_optimal_root",
    "is_caterpillar",
    "is_planar",
    "is_projective",
    "make_family",
    "max_planar",
    "max_planar_caterpillar",
    "max_planar_reference",
    "max_projective",
    "max_projective_cost",
    "min_planar",
    "min_projective",
    "optimal_root_candidates",
    "parse_tree",
    "path",
    "prufer_decode",
    "projective_delta",
    "quasistar",
    "random_caterpillar",
    "random_tree",
    "reverse",
    "sorted_child_lists",
    "spider",
    "star",
    "subtree_sizes",
    "tree_to_text",
]
