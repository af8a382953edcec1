"""Command line entry point: ``tdc <subcommand> ...``.

Exit codes: 0 success, 1 input or parse error, 2 verification failure or
oracle disagreement, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .classes.base import NotInClassError
from .coloring import (
    Coloring,
    analyze,
    dominator_violation,
    extract_td_set,
    proper_violation,
    td_violation,
)
from .domination import IsolatedVertexError, is_td_set
from .exact import BudgetExceeded
from .generators import CLASSES, GenSpec, UnsatisfiableSpec, generate
from .graph import Graph, GraphFormatError, read_graph, to_edge_list, to_graph6
from .harness import FAST_CLASSES, disagreements, oracle_compare, solve
from .trees import NotATreeError, classify_tree

EXIT_OK, EXIT_INPUT, EXIT_FAIL, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get("TDC_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"TDC_SEED must be an integer, got {raw!r}") from None


def _load_graph(path: str, fmt: str = "auto") -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    if fmt == "auto" and path.endswith(".g6"):
        fmt = "graph6"
    return read_graph(text, fmt)


def _load_coloring(path: str, g: Graph) -> Coloring:
    try:
        c = Coloring.from_json(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from None
    if len(c.colors) != g.n:
        raise InputError(f"{path}: {len(c.colors)} colors for a graph on {g.n} vertices")
    return c


def _emit(payload: dict) -> None:
    print(json.dumps(payload))


def cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.file, args.format)
    result = solve(g, args.method, args.budget)
    _emit(result.to_dict())
    return EXIT_OK


_CHECKS = {"td": td_violation, "dominator": dominator_violation, "proper": proper_violation}


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph, args.format)
    c = _load_coloring(args.coloring, g)
    bad = _CHECKS[args.mode](g, c)
    payload = {
        "result": "pass" if bad is None else "fail",
        "mode": args.mode,
        "valid": bad is None,
        "num_colors": c.num_colors,
    }
    if bad is not None:
        payload["vertex"], payload["reason"] = bad
    _emit(payload)
    return EXIT_OK if bad is None else EXIT_FAIL


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph, args.format)
    c = _load_coloring(args.coloring, g)
    bad = td_violation(g, c)
    if bad is not None:
        _emit({"valid": False, "vertex": bad[0], "reason": bad[1]})
        return EXIT_FAIL
    _emit(analyze(g, c).to_dict())
    return EXIT_OK


def cmd_classify_tree(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph, args.format)
    _emit(classify_tree(g).to_dict())
    return EXIT_OK


def cmd_extract(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph, args.format)
    c = _load_coloring(args.coloring, g)
    bad = td_violation(g, c)
    if bad is not None:
        _emit({"valid": False, "vertex": bad[0], "reason": bad[1]})
        return EXIT_FAIL
    d = extract_td_set(g, c)
    _emit({"td_set": sorted(d), "size": len(d), "is_td_set": is_td_set(g, d)})
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    spec = GenSpec(args.cls, args.n, seed, k=args.k, connected=args.connected, p=args.p)
    g = generate(spec)
    sys.stdout.write(to_graph6(g) + "\n" if args.format == "graph6" else to_edge_list(g))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    reports = oracle_compare(args.cls, args.count, args.max_n, seed, args.budget)
    if args.json:
        _emit({"reports": [r.to_dict() for r in reports]})
    else:
        print(f"{'id':>4} {'n':>3} {'method':<28} {'fast':>4} {'exact':>5} {'ok':<3} graph6")
        for r in reports:
            ok = "yes" if r.agree else ("ERR" if r.error else "NO")
            fast = "-" if r.value is None else r.value
            exact = "-" if r.oracle_value is None else r.oracle_value
            print(f"{r.instance_id:>4} {r.n:>3} {r.method:<28} {fast:>4} {exact:>5} {ok:<3} {r.graph6}")
        bad = disagreements(reports)
        errs = sum(1 for r in reports if r.error)
        print(f"# {len(reports)} instances, {len(bad)} disagreements, {errs} budget errors")
    return EXIT_FAIL if disagreements(reports) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tdc", description="Total dominator colorings of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = dict(choices=["auto", "edgelist", "graph6"], default="auto")

    p = sub.add_parser("solve", help="compute chi_td with a witness coloring")
    p.add_argument("file")
    p.add_argument("--format", **fmt)
    p.add_argument("--method", choices=["auto", "exact", "class"], default="auto")
    p.add_argument("--budget", type=int, default=None, help="node budget for exact search")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--mode", choices=list(_CHECKS), default="td")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="class structure of a TD-coloring")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify-tree", help="chi_td - gamma_t tier of a tree, with evidence")
    p.add_argument("graph")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_classify_tree)

    p = sub.add_parser("extract-tdset", help="one vertex per color class of a TD-coloring")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("gen", help="random graph of a class")
    p.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None, help="defaults to $TDC_SEED or 0")
    p.add_argument("--k", type=int, default=None, help="chain: blocks per side")
    p.add_argument("--p", type=float, default=0.4, help="bipartite/any: edge probability")
    conn = p.add_mutually_exclusive_group()
    conn.add_argument("--connected", dest="connected", action="store_true", default=None)
    conn.add_argument("--disconnected", dest="connected", action="store_false")
    p.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="compare a fast solver with exact search")
    p.add_argument("--class", dest="cls", choices=FAST_CLASSES, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None, help="defaults to $TDC_SEED or 0")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--json", action="store_true", help="emit reports as JSON")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"tdc: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (
        InputError,
        GraphFormatError,
        IsolatedVertexError,
        NotATreeError,
        NotInClassError,
        UnsatisfiableSpec,
        ValueError,
    ) as exc:
        print(f"tdc: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
