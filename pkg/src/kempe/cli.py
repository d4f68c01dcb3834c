"""Command-line front end.

Exit codes: 0 success or claim confirmed, 1 claim violation, 2 usage or
input error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import jsonio
from .colouring import Colouring, is_frozen
from .constructions import (
    LabelledConstruction,
    pentagon_layers,
    pentagon_layers_reduced,
    triangle_clique_tensor,
)
from .errors import BudgetExceededError, GraphParseError, PlannerError
from .formats import FORMATS, emit_graph, parse_graph
from .graph import Graph, find_odd_hole, recolouring_threshold
from .oracle import (
    Budget,
    enumerate_frozen,
    fig7_patterns,
    frozen_4x4_search,
    is_k_recolourable,
    reconfiguration_components,
    threshold_audit,
)
from .planner import check_plan, plan_recolouring

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_PALETTE = [
    "gold", "skyblue", "sienna", "orange", "midnightblue", "white",
    "tomato", "seagreen", "orchid", "khaki", "slategray", "salmon",
]


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(path: str, fmt: str) -> Graph:
    return parse_graph(_read_text(path), fmt)


def _load_colouring(path: str) -> Colouring:
    return jsonio.colouring_from_dict(json.loads(_read_text(path)))


def _dot_export(construction: LabelledConstruction) -> str:
    g = construction.graph
    lines = ["graph construction {", "  node [style=filled];"]
    for v in g.vertices():
        colour = construction.frozen[v]
        fill = _PALETTE[colour % len(_PALETTE)]
        cls, label = construction.labels[v]
        lines.append(
            f'  v{v} [label="{cls}.{label}" fillcolor="{fill}" colour={colour}];'
        )
    for u, v in g.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _budget_from(args) -> Budget:
    return Budget(
        max_colourings=args.max_colourings,
        max_vertices=args.max_vertices,
    )


def _add_budget_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-colourings", type=int, default=10_000_000,
                   help="cap on enumerated colourings (default 1e7)")
    p.add_argument("--max-vertices", type=int, default=20,
                   help="cap on vertex count for enumeration (default 20)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kempe",
        description="Graph recolouring toolkit: constructions, planning, oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="generate a named construction")
    p.add_argument("family", choices=["tensor", "hk", "gk"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="graph6")
    p.add_argument("--out", help="graph output path (default stdout)")
    p.add_argument("--colourings", help="write frozen/alternate colourings as JSON")
    p.add_argument("--dot", help="write a DOT rendering with colour attributes")

    p = sub.add_parser("check-frozen", help="exit 0 iff the colouring is frozen")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=FORMATS, default="graph6")
    p.add_argument("--colouring", required=True)

    p = sub.add_parser("plan", help="plan a Kempe-change sequence between colourings")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=FORMATS, default="graph6")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--out", help="plan output path (default stdout)")
    p.add_argument("--no-precheck", action="store_true",
                   help="skip the exhaustive odd-hole precondition check")

    p = sub.add_parser("verify", help="replay a plan; exit 0 iff it is valid")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=FORMATS, default="graph6")
    p.add_argument("--plan", required=True)

    p = sub.add_parser("oracle", help="exhaustive colouring-space queries")
    p.add_argument("query", choices=["classes", "frozen", "recolourable"])
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=FORMATS, default="graph6")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    _add_budget_args(p)

    p = sub.add_parser("fig7", help="class-pair patterns and the 4x4x4x4 search")
    p.add_argument("--out")
    p.add_argument("--skip-relaxed", action="store_true",
                   help="skip the relaxed sanity search")

    p = sub.add_parser("audit", help="degree-bound audit over a graph6 corpus")
    p.add_argument("--corpus", required=True, help="file of graph6 lines, '-' for stdin")
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--out")
    _add_budget_args(p)

    p = sub.add_parser("f-value", help="local degree/clique threshold of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=FORMATS, default="graph6")

    p = sub.add_parser("odd-hole", help="search for an induced odd cycle")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=FORMATS, default="graph6")
    p.add_argument("--max-len", type=int, default=None)

    return parser


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    try:
        return _dispatch(args)
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PlannerError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args) -> int:
    if args.command == "construct":
        return _cmd_construct(args)
    if args.command == "check-frozen":
        return _cmd_check_frozen(args)
    if args.command == "plan":
        return _cmd_plan(args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "oracle":
        return _cmd_oracle(args)
    if args.command == "fig7":
        return _cmd_fig7(args)
    if args.command == "audit":
        return _cmd_audit(args)
    if args.command == "f-value":
        g = _load_graph(args.graph, args.format)
        print(
            jsonio.dumps({"schema": jsonio.SCHEMA_VERSION, "f": recolouring_threshold(g)}),
            end="",
        )
        return EXIT_OK
    if args.command == "odd-hole":
        g = _load_graph(args.graph, args.format)
        hole = find_odd_hole(g, args.max_len)
        payload = {"schema": jsonio.SCHEMA_VERSION, "found": hole is not None}
        if hole is not None:
            payload["cycle"] = list(hole.cycle)
        print(jsonio.dumps(payload), end="")
        return EXIT_OK
    raise AssertionError(f"unhandled command {args.command}")


def _cmd_construct(args) -> int:
    makers = {
        "tensor": triangle_clique_tensor,
        "hk": pentagon_layers,
        "gk": pentagon_layers_reduced,
    }
    construction = makers[args.family](args.k)
    construction.check()
    _write_text(args.out, emit_graph(construction.graph, args.format) + "\n")
    if args.colourings:
        payload = {
            "schema": jsonio.SCHEMA_VERSION,
            "graph_sha256": jsonio.graph_digest(construction.graph),
            "frozen": jsonio.colouring_to_dict(construction.frozen),
            "alternate": (
                jsonio.colouring_to_dict(construction.alternate)
                if construction.alternate is not None
                else None
            ),
            "labels": [list(construction.labels[v]) for v in construction.graph.vertices()],
        }
        _write_text(args.colourings, jsonio.dumps(payload))
    if args.dot:
        _write_text(args.dot, _dot_export(construction))
    return EXIT_OK


def _cmd_check_frozen(args) -> int:
    g = _load_graph(args.graph, args.format)
    c = _load_colouring(args.colouring)
    try:
        frozen = is_frozen(g, c)
    except ValueError as exc:
        print(f"not frozen: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    if not frozen:
        print("not frozen: some colour pair spans a disconnected subgraph", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_plan(args) -> int:
    g = _load_graph(args.graph, args.format)
    alpha = _load_colouring(args.alpha)
    beta = _load_colouring(args.beta)
    plan = plan_recolouring(g, alpha, beta, check_preconditions=not args.no_precheck)
    _write_text(args.out, jsonio.dumps(jsonio.plan_to_dict(g, plan)))
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph, args.format)
    plan = jsonio.plan_from_dict(g, json.loads(_read_text(args.plan)))
    problem = check_plan(g, plan)
    if problem is not None:
        print(f"invalid plan: {problem}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = _load_graph(args.graph, args.format)
    budget = _budget_from(args)
    if args.query == "classes":
        summary = reconfiguration_components(g, args.k, budget)
        payload = {"schema": jsonio.SCHEMA_VERSION, **summary.to_dict()}
    elif args.query == "frozen":
        frozen = enumerate_frozen(g, args.k, budget)
        payload = {
            "schema": jsonio.SCHEMA_VERSION,
            "k": args.k,
            "frozen": [jsonio.colouring_to_dict(c) for c in frozen],
        }
    else:
        payload = {
            "schema": jsonio.SCHEMA_VERSION,
            "k": args.k,
            "recolourable": is_k_recolourable(g, args.k, budget),
        }
    _write_text(args.out, jsonio.dumps(payload))
    return EXIT_OK


def _cmd_fig7(args) -> int:
    patterns = fig7_patterns()
    search = frozen_4x4_search(triangle_free=True)
    payload = {
        "schema": jsonio.SCHEMA_VERSION,
        "patterns": [p.edges() for p in patterns],
        "pattern_count": len(patterns),
        "search": search.to_dict(),
    }
    ok = len(patterns) == 5 and search.configurations == 0
    if not args.skip_relaxed:
        relaxed = frozen_4x4_search(triangle_free=False, stop_after=1)
        payload["relaxed"] = relaxed.to_dict()
        ok = ok and relaxed.configurations >= 1
    _write_text(args.out, jsonio.dumps(payload))
    if not ok:
        print("pattern search violated its expected outcome", file=sys.stderr)
        return EXIT_VIOLATION
    print(
        f"{len(patterns)} patterns; no frozen 4x4 configuration "
        f"({search.nodes_explored} nodes)",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_audit(args) -> int:
    corpus = []
    for line in _read_text(args.corpus).splitlines():
        line = line.strip()
        if line:
            corpus.append(parse_graph(line, "graph6"))
    report = threshold_audit(
        corpus, range(args.k_min, args.k_max + 1), _budget_from(args)
    )
    _write_text(args.out, jsonio.dumps({"schema": jsonio.SCHEMA_VERSION, **report.to_dict()}))
    if report.violations:
        print(f"{len(report.violations)} violation(s)", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
