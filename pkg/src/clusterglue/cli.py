"""Deterministic command-line interface.

Exit codes: 0 success, 2 unreadable/unparsable input, 3 validation or
precondition failure, 4 verification failure, 5 truncated or inconclusive
result. All output is byte-reproducible across runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .explore import enumerate_graph, verify_correspondence, verify_counts
from .gluing import GlueError, glue, verify_tensor_map
from .reports import Report
from .seedio import (
    SeedDocumentError,
    parse_seed,
    render_seed,
    seed_state,
    state_summary,
)
from .seeds import MutationError, Seed, SeedError, apply_sequence, scale_grading

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_VERIFICATION = 4
EXIT_INCONCLUSIVE = 5


def _load_seed(path: str) -> Seed:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SeedDocumentError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_seed(text)


def _emit_json(payload: dict[str, Any]) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def cmd_mutate(args: argparse.Namespace) -> int:
    seed = _load_seed(args.seed)
    result = apply_sequence(seed, args.vertex)
    state = seed_state(result)
    if args.json:
        _emit_json({"status": "ok", "state": state})
    else:
        sys.stdout.write(state_summary(state))
    return EXIT_OK


def cmd_glue(args: argparse.Namespace) -> int:
    s1 = _load_seed(args.left)
    s2 = _load_seed(args.right)
    glued = glue(s1, args.left_vertex, s2, args.right_vertex)
    if args.json:
        _emit_json(
            {
                "status": "ok",
                "document": json.loads(render_seed(glued.seed)),
                "state": seed_state(glued.seed, glued=glued),
            }
        )
    else:
        sys.stdout.write(state_summary(seed_state(glued.seed, glued=glued)))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    seed = _load_seed(args.seed)
    graph = enumerate_graph(
        seed,
        max_nodes=args.max_nodes,
        max_depth=args.max_depth,
        workers=args.workers,
        strict=args.strict,
    )
    exhausted = graph.exhausted
    payload: dict[str, Any] = {
        "status": graph.status,
        "kappa": graph.variable_count() if exhausted else None,
        "K": graph.cluster_count() if exhausted else None,
        "witnesses": [],
        "bounds": {"max_nodes": args.max_nodes, "max_depth": args.max_depth},
        "nodes_visited": len(graph.nodes),
        "depth_reached": graph.depth_reached,
    }
    if args.graph:
        node_keys = sorted(graph.nodes)
        index = {k: i for i, k in enumerate(node_keys)}
        payload["graph"] = {
            "nodes": [
                sorted(sv.value.render() for sv in graph.nodes[k].variables)
                for k in node_keys
            ],
            "edges": sorted(
                [index[a], slot, index[b]] for a, slot, b in graph.edges
            ),
        }
    if args.json:
        _emit_json(payload)
    else:
        print(f"status: {graph.status}")
        if exhausted:
            print(f"kappa: {payload['kappa']}")
            print(f"K: {payload['K']}")
        print(f"nodes visited: {payload['nodes_visited']}")
        print(f"depth reached: {payload['depth_reached']}")
    return EXIT_OK if exhausted else EXIT_INCONCLUSIVE


def _report_exit(report: Report) -> int:
    if report.status == "ok":
        return EXIT_OK
    if report.status == "mismatch":
        return EXIT_VERIFICATION
    return EXIT_INCONCLUSIVE


def _print_witnesses(report: Report) -> None:
    for w in report.witnesses[:5]:
        seq = " ".join(w.sequence) if w.sequence else "(initial)"
        print(f"  at [{seq}] slot {w.slot}:")
        print(f"    expected {w.expected}")
        print(f"    actual   {w.actual}")
        if w.detail:
            print(f"    ({w.detail})")
    if len(report.witnesses) > 5:
        print(f"  ... and {len(report.witnesses) - 5} more")


def cmd_verify_theorem(args: argparse.Namespace) -> int:
    s1 = _load_seed(args.left)
    s2 = _load_seed(args.right)
    if args.force_degree != 1:
        s1 = scale_grading(s1, args.force_degree)
        s2 = scale_grading(s2, args.force_degree)
    naive = args.force_degree != 1
    report = verify_tensor_map(
        s1, args.left_vertex, s2, args.right_vertex, depth=args.depth, naive=naive
    )
    report.extra["map"] = "modified" if naive else "exact"
    if args.json:
        _emit_json(report.to_dict())
    else:
        print(f"status: {report.status}")
        print(f"map: {report.extra['map']}")
        print(f"checked: {report.checked} values at depth <= {args.depth}")
        _print_witnesses(report)
    return _report_exit(report)


def cmd_verify_corollary(args: argparse.Namespace) -> int:
    s1 = _load_seed(args.left)
    s2 = _load_seed(args.right)
    report = verify_counts(
        s1, args.left_vertex, s2, args.right_vertex, args.max_nodes, args.max_depth
    )
    if args.json:
        _emit_json(report.to_dict())
    else:
        print(f"status: {report.status}")
        if report.status != "inconclusive":
            e = report.extra
            print(
                f"kappa: {report.kappa} = {e['kappa_left']} + {e['kappa_right']} - 1"
            )
            print(f"K: {report.K} = {e['K_left']} * {e['K_right']}")
            _print_witnesses(report)
        else:
            for side in ("left", "right", "glued"):
                print(f"{side}: {report.extra[f'{side}_status']}")
    return _report_exit(report)


def cmd_verify_correspondence(args: argparse.Namespace) -> int:
    s1 = _load_seed(args.left)
    s2 = _load_seed(args.right)
    report = verify_correspondence(
        s1, args.left_vertex, s2, args.right_vertex, args.max_nodes, args.max_depth
    )
    if args.json:
        _emit_json(report.to_dict())
    else:
        print(f"status: {report.status}")
        if report.status != "bounded":
            print(f"cluster pairs: {report.extra['pairs']}")
            print(f"glued clusters: {report.extra['glued_clusters']}")
            _print_witnesses(report)
    if report.status == "bounded":
        return EXIT_INCONCLUSIVE
    return _report_exit(report)


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clusterglue",
        description="Exact graded cluster algebra seeds, gluing, and Segre products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="apply a mutation sequence to a seed file")
    p.add_argument("seed")
    p.add_argument("vertex", nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("glue", help="glue two seeds at frozen vertices")
    p.add_argument("left")
    p.add_argument("left_vertex")
    p.add_argument("right")
    p.add_argument("right_vertex")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_glue)

    p = sub.add_parser("enumerate", help="breadth-first exchange graph enumeration")
    p.add_argument("seed")
    p.add_argument("--max-nodes", type=int, required=True)
    p.add_argument("--max-depth", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--strict", action="store_true", help="key clusters on values and matrix")
    p.add_argument("--graph", action="store_true", help="include node/edge lists")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run a verification suite")
    vsub = v.add_subparsers(dest="check", required=True)

    p = vsub.add_parser(
        "theorem", help="cluster variables map to factor-side tensors"
    )
    p.add_argument("left")
    p.add_argument("left_vertex")
    p.add_argument("right")
    p.add_argument("right_vertex")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument(
        "--force-degree",
        type=int,
        default=1,
        metavar="D",
        help="scale all degrees by D; D != 1 switches to the modified map",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_theorem)

    p = vsub.add_parser("corollary", help="count identities kappa and K")
    p.add_argument("left")
    p.add_argument("left_vertex")
    p.add_argument("right")
    p.add_argument("right_vertex")
    p.add_argument("--max-nodes", type=int, default=10_000)
    p.add_argument("--max-depth", type=int, default=64)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_corollary)

    p = vsub.add_parser(
        "correspondence", help="variable and cluster correspondence with the factors"
    )
    p.add_argument("left")
    p.add_argument("left_vertex")
    p.add_argument("right")
    p.add_argument("right_vertex")
    p.add_argument("--max-nodes", type=int, default=10_000)
    p.add_argument("--max-depth", type=int, default=64)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_correspondence)

    p = sub.add_parser("serve", help="start the session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8787)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SeedDocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (SeedError, MutationError, GlueError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
