"""Command-line front end: JSON documents in, JSON reports out.

Exit codes: 0 success, 1 failed verification checks, 2 malformed input or
unknown names, 3 a resource cap was hit, 4 a precondition was violated
(e.g. tree labelling of a non-tree).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any

from .construction import extract_witness_chain, run_construction, verify_lower_bound
from .documents import (
    DocumentError,
    build_fixture,
    document_digest,
    fixture_names,
    parse_action_document,
    parse_graph_document,
)
from .graphs import graph_action, tree_distinguishing_labelling
from .labelling import exact_distinguishing_number, is_distinguishing
from .perms import DEFAULT_ELEMENT_CAP, GroupAction, PreconditionError, ResourceLimitError
from .verify import available_checks, run_checks

EXIT_OK = 0
EXIT_FAILED_CHECKS = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_PRECONDITION = 4


def _load_document(path: str) -> dict[str, Any]:
    with open(path, encoding="utf-8") as handle:
        doc = json.load(handle)
    if not isinstance(doc, dict):
        raise DocumentError("document root must be a JSON object")
    return doc


def _exact_section(action: GroupAction, k_max: int | None) -> dict[str, Any]:
    result = exact_distinguishing_number(action, k_max)
    section: dict[str, Any] = {"k_max": result.k_max, "distinguishing_number": result.number}
    if result.witness is None:
        section["exceeded"] = True
    else:
        assert is_distinguishing(action, result.witness).distinguishing
        section["witness"] = list(result.witness.labels)
        section["witness_verified"] = True
    return section


def _construction_section(action: GroupAction) -> dict[str, Any]:
    phi, trace = run_construction(action)
    chain = extract_witness_chain(trace)
    report = verify_lower_bound(trace, chain)
    assert is_distinguishing(action, phi).distinguishing
    return {
        "label_count": trace.label_count,
        "iterations": trace.iteration_count,
        "labelling": list(phi.labels),
        "labelling_verified": True,
        "witness_chain": list(chain.points),
        "chain_orbit_sizes": list(report.orbit_sizes),
        "bound_product": report.product,
        "group_order": report.group_order,
        "bound_ok": report.ok,
        "stage_group_orders": [s.group.order for s in trace.stages],
        "chosen_sets": [list(s.chosen) for s in trace.stages if s.chosen is not None],
    }


def _emit(report: dict[str, Any], started: float) -> None:
    report["timing_ms"] = round((time.perf_counter() - started) * 1000, 3)
    print(json.dumps(report, indent=2, sort_keys=True))


def _cmd_action(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    doc = _load_document(args.path)
    action = parse_action_document(doc, element_cap=args.cap)
    report: dict[str, Any] = {
        "input": {
            "kind": "action",
            "digest": document_digest(doc),
            "degree": action.group.degree,
            "group_order": action.group.order,
            "domain_size": action.domain_size,
            "kernel_order": action.kernel().order,
        }
    }
    if args.exact or args.kmax is not None or not args.construct:
        report["exact"] = _exact_section(action, args.kmax)
    if args.construct:
        report["construction"] = _construction_section(action)
    _emit(report, started)
    return EXIT_OK


def _cmd_graph(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    doc = _load_document(args.path)
    graph = parse_graph_document(doc)
    action = graph_action(graph, element_cap=args.cap, vertex_limit=args.vertex_limit)
    report: dict[str, Any] = {
        "input": {
            "kind": "graph",
            "digest": document_digest(doc),
            "vertices": graph.vertex_count,
            "edge_count": len(graph.edges),
            "automorphism_order": action.group.order,
        }
    }
    if args.tree:
        phi = tree_distinguishing_labelling(graph, element_cap=args.cap)
        report["tree"] = {
            "label_count": phi.label_count,
            "labelling": list(phi.labels),
            "max_degree": graph.max_degree(),
            "labelling_verified": True,
        }
    if args.exact or (not args.tree and not args.construct):
        report["exact"] = _exact_section(action, None)
    if args.construct:
        report["construction"] = _construction_section(action)
    _emit(report, started)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    names = available_checks()
    if args.list:
        for name in names:
            print(name)
        return EXIT_OK
    if args.suite == "all":
        selected = names
    elif args.suite in names:
        selected = (args.suite,)
    else:
        print(f"error: unknown check '{args.suite}'", file=sys.stderr)
        print("available: all, " + ", ".join(names), file=sys.stderr)
        return EXIT_INPUT
    results = run_checks(selected)
    for result in results:
        print(f"{'PASS' if result.passed else 'FAIL'} {result.name}: {result.detail}")
    failed = sum(1 for r in results if not r.passed)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_FAILED_CHECKS


def _cmd_fixture(args: argparse.Namespace) -> int:
    try:
        _, doc = build_fixture(args.name)
    except DocumentError:
        print(f"error: unknown fixture '{args.name}'", file=sys.stderr)
        print("available: " + ", ".join(fixture_names()), file=sys.stderr)
        return EXIT_INPUT
    print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distnum",
        description="Distinguishing numbers of finite group actions and graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    action = sub.add_parser("action", help="analyze a group-action document")
    action.add_argument("path", help="path to an action JSON document")
    action.add_argument("--exact", action="store_true", help="exact distinguishing number (default)")
    action.add_argument("--construct", action="store_true", help="run the recursive labelling construction")
    action.add_argument("--kmax", type=int, default=None, help="label budget for the exact search")
    action.add_argument("--cap", type=int, default=DEFAULT_ELEMENT_CAP, help="group enumeration cap")
    action.set_defaults(func=_cmd_action)

    graph = sub.add_parser("graph", help="analyze a graph document")
    graph.add_argument("path", help="path to a graph JSON document")
    graph.add_argument("--exact", action="store_true", help="exact distinguishing number (default)")
    graph.add_argument("--tree", action="store_true", help="constructive tree labelling (trees only)")
    graph.add_argument("--construct", action="store_true", help="run the recursive labelling construction")
    graph.add_argument("--vertex-limit", type=int, default=12, help="exhaustive automorphism search limit")
    graph.add_argument("--cap", type=int, default=DEFAULT_ELEMENT_CAP, help="automorphism count cap")
    graph.set_defaults(func=_cmd_graph)

    verify = sub.add_parser("verify", help="run the theorem-verification suite")
    verify.add_argument("suite", nargs="?", default="all", help="check name, or 'all'")
    verify.add_argument("--list", action="store_true", help="list available checks")
    verify.set_defaults(func=_cmd_verify)

    fixture = sub.add_parser("fixture", help="emit a named fixture document")
    fixture.add_argument("name", help="fixture name (e.g. c5, figure5, figure7)")
    fixture.set_defaults(func=_cmd_fixture)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}", file=sys.stderr)
        return EXIT_INPUT
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"error: cannot read '{exc.filename}'", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    raise SystemExit(main())
