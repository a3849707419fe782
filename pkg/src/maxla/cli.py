"""Command-line front end: solve, check, oracle, gen, bench.

Exit codes: 0 success, 1 I/O or parse failure, 2 usage error (bad flags,
oracle size guard), 3 constraint violation reported by ``check``. Every
subcommand accepts ``--json`` for machine-readable output and reads '-' as
standard input wherever a file is expected.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from statistics import mean, pstdev
from typing import Sequence

from .arrangements import Arrangement, cost, is_planar, is_projective
from .generators import SplitMix64, make_family, random_tree
from .oracle import MAX_ORACLE_N, exhaustive
from .planar import find_optimal_root
from .projective import max_projective, min_projective
from .trees import FreeTree, RootedTree, TreeFormatError, centroid, subtree_sizes, tree_to_text


class _UsageError(Exception):
    """Flag combinations the parser cannot catch (mapped to exit code 2)."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_tree(path: str) -> FreeTree:
    from .trees import parse_tree

    return parse_tree(_read_text(path))


def _load_arrangement(path: str) -> Arrangement:
    tokens: list[str] = []
    for line in _read_text(path).splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            tokens.extend(line.split())
    try:
        positions = [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"non-integer field in arrangement file {path!r}") from None
    return Arrangement(positions)


def _require_root(args: argparse.Namespace, n: int) -> int:
    if args.root is None:
        raise _UsageError("--root is required with the projective constraint")
    if not (1 <= args.root <= n):
        raise _UsageError(f"--root {args.root} outside [1, {n}]")
    return args.root


def _forbid_root(args: argparse.Namespace) -> None:
    if args.root is not None:
        raise _UsageError("--root only applies to the projective constraint")


def _arrangement_dot(tree: FreeTree, arr: Arrangement) -> str:
    """Graph-description output: vertices pinned to line positions, edges as arcs.

    Render with a position-respecting engine (e.g. ``neato -n``).
    """
    lines = [
        "graph arrangement {",
        "  splines=curved;",
        "  node [shape=circle];",
    ]
    for p in range(1, arr.n + 1):
        lines.append(f'  {arr.inv[p]} [pos="{p},0!"];')
    for u, v in tree.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_solve(args: argparse.Namespace) -> int:
    tree = _load_tree(args.tree)
    show_root: int | None = None
    if args.constraint == "projective":
        root = _require_root(args, tree.n)
        rooted = RootedTree(tree, root)
        arr, value = max_projective(rooted) if args.task == "maxla" else min_projective(rooted)
    else:
        _forbid_root(args)
        sizes = subtree_sizes(tree)
        if args.task == "maxla":
            show_root, _ = find_optimal_root(tree, sizes=sizes)
        else:
            show_root = centroid(tree, sizes)
        rooted = RootedTree(tree, show_root)
        solver = max_projective if args.task == "maxla" else min_projective
        arr, value = solver(rooted, sizes=sizes)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(_arrangement_dot(tree, arr))
    if args.json:
        payload = {
            "task": args.task,
            "constraint": args.constraint,
            "n": tree.n,
            "D": value,
            "position": list(arr.pos[1:]),
        }
        if show_root is not None:
            payload["root"] = show_root
        print(json.dumps(payload))
    else:
        print(f"D={value}")
        print(arr.to_text_line())
        if show_root is not None:
            print(f"root={show_root}")
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    tree = _load_tree(args.tree)
    arr = _load_arrangement(args.arrangement)
    if arr.n != tree.n:
        raise ValueError(f"tree has {tree.n} vertices but arrangement has {arr.n}")
    if args.constraint == "projective":
        root = _require_root(args, tree.n)
        valid = is_projective(RootedTree(tree, root), arr)
    else:
        _forbid_root(args)
        valid = is_planar(tree, arr)
    value = cost(tree, arr)
    if args.json:
        print(json.dumps({"valid": valid, "D": value, "n": tree.n}))
    else:
        print(f"{'valid' if valid else 'invalid'} D={value}")
    return 0 if valid else 3


def _cmd_oracle(args: argparse.Namespace) -> int:
    tree = _load_tree(args.tree)
    if tree.n > MAX_ORACLE_N:
        raise _UsageError(f"oracle is capped at n <= {MAX_ORACLE_N}, got n={tree.n}")
    root = None
    if args.constraint == "projective":
        root = _require_root(args, tree.n)
    else:
        _forbid_root(args)
    result = exhaustive(tree, args.constraint, args.objective, root)
    if args.json:
        print(
            json.dumps(
                {
                    "D": result.cost,
                    "count": result.count,
                    "position": list(result.witness.pos[1:]),
                }
            )
        )
    else:
        print(f"D={result.cost} count={result.count}")
        print(result.witness.to_text_line())
    return 0


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t != ""]
    except ValueError:
        raise _UsageError(f"{flag} expects a comma-separated integer list, got {text!r}") from None


def _cmd_gen(args: argparse.Namespace) -> int:
    kind = args.kind
    try:
        if kind == "random":
            if args.n is None:
                raise _UsageError("random requires n")
            tree = random_tree(args.n, args.seed)
        elif kind == "caterpillar":
            if args.leaves is None:
                raise _UsageError("caterpillar requires --leaves")
            tree = make_family(kind, args.n, leaf_counts=_parse_int_list(args.leaves, "--leaves"))
        elif kind == "spider":
            if args.legs is None:
                raise _UsageError("spider requires --legs")
            tree = make_family(kind, args.n, leg_lengths=_parse_int_list(args.legs, "--legs"))
        else:
            hub_leaves = None
            if args.hub_leaves is not None:
                parts = _parse_int_list(args.hub_leaves, "--hub-leaves")
                if len(parts) != 2:
                    raise _UsageError("--hub-leaves expects exactly two counts")
                hub_leaves = (parts[0], parts[1])
            tree = make_family(kind, args.n, hub_leaves=hub_leaves)
    except ValueError as exc:  # inconsistent family parameters are usage errors
        raise _UsageError(str(exc)) from None
    if args.json:
        print(json.dumps({"n": tree.n, "edges": [list(e) for e in tree.edges]}))
    else:
        sys.stdout.write(tree_to_text(tree))
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    import gc

    from .planar import max_planar

    sizes = _parse_int_list(args.sizes, "--sizes")
    if not sizes or any(s < 1 for s in sizes):
        raise _UsageError(f"--sizes must be positive integers, got {args.sizes!r}")
    if args.trials < 1:
        raise _UsageError("--trials must be >= 1")
    seeder = SplitMix64(args.seed)
    results = []
    for size in sizes:
        times_ns = []
        for _ in range(args.trials):
            tree = random_tree(size, seeder.next_u64())
            # timeit-style hygiene: collector off while the clock runs
            gc.collect()
            gc.disable()
            try:
                t0 = time.perf_counter_ns()
                max_planar(tree)
                times_ns.append(time.perf_counter_ns() - t0)
            finally:
                gc.enable()
        results.append(
            {
                "size": size,
                "mean_ns": int(mean(times_ns)),
                "std_ns": int(pstdev(times_ns)),
            }
        )
    if args.json:
        print(json.dumps(results))
    else:
        print(f"{'size':>10} {'mean_ns':>15} {'std_ns':>15}")
        for row in results:
            print(f"{row['size']:>10} {row['mean_ns']:>15} {row['std_ns']:>15}")
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxla",
        description="Maximum and minimum linear arrangements of trees under "
        "planarity and projectivity constraints.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve an arrangement problem for a tree file")
    solve.add_argument("task", choices=("maxla", "minla"))
    solve.add_argument("constraint", choices=("projective", "planar"))
    solve.add_argument("tree", help="tree file, or - for stdin")
    solve.add_argument("--root", type=int, help="root vertex (projective only)")
    solve.add_argument("--dot", metavar="PATH", help="also write the arrangement as a DOT file")
    solve.add_argument("--json", action="store_true")
    solve.set_defaults(handler=_cmd_solve)

    check = sub.add_parser("check", help="validate an arrangement against a constraint")
    check.add_argument("constraint", choices=("projective", "planar"))
    check.add_argument("tree", help="tree file, or - for stdin")
    check.add_argument("arrangement", help="arrangement file, or - for stdin")
    check.add_argument("--root", type=int, help="root vertex (projective only)")
    check.add_argument("--json", action="store_true")
    check.set_defaults(handler=_cmd_check)

    oracle = sub.add_parser("oracle", help="brute-force optimum for a small tree")
    oracle.add_argument("objective", choices=("max", "min"))
    oracle.add_argument("constraint", choices=("planar", "projective", "unconstrained"))
    oracle.add_argument("tree", help="tree file, or - for stdin")
    oracle.add_argument("--root", type=int, help="root vertex (projective only)")
    oracle.add_argument("--json", action="store_true")
    oracle.set_defaults(handler=_cmd_oracle)

    gen = sub.add_parser("gen", help="emit a tree file for a named family")
    gen.add_argument(
        "kind",
        choices=("star", "path", "bistar", "quasistar", "caterpillar", "spider", "random"),
    )
    gen.add_argument("n", type=int, nargs="?", help="vertex count (where applicable)")
    gen.add_argument("--hub-leaves", help="bistar: leaf counts 'h1,h2' for the two hubs")
    gen.add_argument("--leaves", help="caterpillar: per-backbone-vertex leaf counts 'l1,l2,...'")
    gen.add_argument("--legs", help="spider: leg lengths 'g1,g2,...'")
    gen.add_argument("--seed", type=int, default=0, help="seed for random trees")
    gen.add_argument("--json", action="store_true")
    gen.set_defaults(handler=_cmd_gen)

    bench = sub.add_parser("bench", help="time the planar maximization on random trees")
    bench.add_argument("--sizes", default="1000,10000", help="comma-separated vertex counts")
    bench.add_argument("--trials", type=int, default=3)
    bench.add_argument("--seed", type=int, default=1)
    bench.add_argument("--json", action="store_true")
    bench.set_defaults(handler=_cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TreeFormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
