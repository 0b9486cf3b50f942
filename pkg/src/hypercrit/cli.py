"""Command-line front end.

Exit codes: 0 success, 1 well-formed negative answer (e.g. a transform's
precondition does not hold), 2 usage or input error. JSON goes to stdout,
short human summaries to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as hgio
from .criticality import PreconditionError, classify
from .hypergraph import HypergraphError, degree_profile, rank_profile, validate_membership
from .search import CATALOG_NAMES, catalog, extremal_order, write_search_stream
from .solvers import ConstructionInapplicable, matching_number, quasidegree, transversal_number
from .transforms import DegenerateShrink, minimalize, rank_lift, saturate, shrink_to_edge_critical, uniformize_extend

TRANSFORMS = ("saturate", "shrink-to-edge-critical", "rank-lift", "minimalize", "uniformize-extend")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(args, payload: dict, text: str | None = None) -> None:
    body = text if args.format == "text" and text is not None else _dumps(payload)
    if getattr(args, "output", None) and args.command != "transform":
        Path(args.output).write_text(body)
    else:
        sys.stdout.write(body)


def _membership_json(h) -> dict | None:
    if not validate_membership(h).in_H_r:
        return None
    return classify(h).to_json()


def analyze_payload(h) -> dict:
    report = validate_membership(h)
    payload: dict = {
        "hypergraph": hgio.to_json_obj(h),
        "membership": {"in_H_r": report.in_H_r, "violations": [list(v) for v in report.violations]},
    }
    if h.edges:
        rp = rank_profile(h)
        payload["rank_profile"] = {"is_uniform": rp.is_uniform, "min_edge_size": rp.min_edge_size, "rank": rp.rank}
    else:
        payload["rank_profile"] = None
    dp = degree_profile(h)
    payload["degree_profile"] = {"degrees": list(dp.degrees), "isolated": list(dp.isolated), "min_degree": dp.min_degree}
    payload["transversal"] = transversal_number(h).to_json()
    payload["matching"] = matching_number(h).to_json()
    payload["quasidegree"] = [quasidegree(h, v).to_json() for v in range(h.n)]
    payload["classes"] = classify(h).to_json() if report.in_H_r else None
    return payload


def _analyze_text(p: dict) -> str:
    lines = [f"n = {p['hypergraph']['n']}, edges = {len(p['hypergraph']['edges'])}"]
    if p["rank_profile"]:
        rp = p["rank_profile"]
        lines.append(f"rank {rp['rank']}" + (" (uniform)" if rp["is_uniform"] else ""))
    lines.append(f"min degree {p['degree_profile']['min_degree']}")
    lines.append(f"tau = {p['transversal']['tau']}  witness {p['transversal']['witness']}")
    lines.append(f"alpha' = {p['matching']['alpha_prime']}")
    lines.append("qd = " + " ".join(str(q["qd"]) for q in p["quasidegree"]))
    if p["classes"]:
        lines.append("classes: " + " ".join(f"H{i}={'yes' if p['classes'][f'H{i}'] else 'no'}" for i in range(1, 6)))
    else:
        lines.append("not in H_r: " + "; ".join(" ".join(map(str, v)) for v in p["membership"]["violations"]))
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    h = hgio.load(args.path)
    payload = analyze_payload(h)
    _emit(args, payload, _analyze_text(payload))
    cls = payload["classes"]
    if cls:
        print("H1..H5: " + "".join("1" if cls[f"H{i}"] else "0" for i in range(1, 6)), file=sys.stderr)
    return 0


def cmd_transform(args) -> int:
    h = hgio.load(args.path)
    before = _membership_json(h)
    report = None
    try:
        if args.op == "saturate":
            out, trace = saturate(h)
        elif args.op == "shrink-to-edge-critical":
            out, trace = shrink_to_edge_critical(h)
        elif args.op == "rank-lift":
            out, report = rank_lift(h)
            trace = report.trace
        elif args.op == "minimalize":
            out, trace = minimalize(h)
        else:
            out, trace = uniformize_extend(h, args.rank)
    except (PreconditionError, ConstructionInapplicable, DegenerateShrink) as exc:
        witness = getattr(exc, "witness", None)
        payload = {"error": str(exc), "op": args.op, "witness": _jsonable(witness)}
        if isinstance(exc, DegenerateShrink):
            payload["trace"] = exc.trace.to_records()
        sys.stdout.write(_dumps(payload))
        print(f"{args.op}: {exc}", file=sys.stderr)
        return 1
    payload = {
        "after": _membership_json(out),
        "before": before,
        "op": args.op,
        "output": hgio.to_json_obj(out),
        "trace": trace.to_records(),
    }
    if report is not None:
        payload["report"] = report.to_json()
    if args.output:
        hgio.dump(out, args.output)
        trace_path = Path(args.trace) if args.trace else Path(str(args.output) + ".trace.jsonl")
        trace_path.write_text("".join(json.dumps(r, sort_keys=True) + "\n" for r in trace.to_records()))
    if args.format == "text":
        sys.stdout.write(hgio.format_text(out))
    else:
        sys.stdout.write(_dumps(payload))
    print(f"{args.op}: n {h.n} -> {out.n}, edges {len(h)} -> {len(out)}, {len(trace)} steps", file=sys.stderr)
    return 0


def _jsonable(obj):
    if isinstance(obj, (tuple, list)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, frozenset):
        return sorted(obj)
    return obj


def cmd_search(args) -> int:
    if args.rank < 2:
        raise UsageError("--rank must be at least 2")
    if args.cls not in range(1, 6):
        raise UsageError("--class must be in 1..5")
    if args.max_n < 2:
        raise UsageError("--max-n must be at least 2")
    if not args.witness_only and (args.rank > 3 or args.max_n > 12):
        raise UsageError("exhaustive search needs --rank 2 or 3 and --max-n <= 12; use --witness-only")
    record = extremal_order(args.cls, args.rank, args.max_n, witness_only=args.witness_only,
                            uniform=args.uniform, time_budget=args.time_budget)
    if args.jsonl:
        with open(args.jsonl, "w") as fp:
            write_search_stream(fp, args.rank, args.max_n, uniform=args.uniform)
    payload = record.to_json()
    text = f"n^{args.cls}({args.rank}) >= {record.best_order}" + (" (exhaustive)" if record.exhaustive else "") + "\n"
    _emit(args, payload, text)
    print(text.strip(), file=sys.stderr)
    return 0


def cmd_catalog(args) -> int:
    try:
        entry = catalog(args.name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    payload = {"name": entry.name, "provenance": entry.provenance, "hypergraph": hgio.to_json_obj(entry.hypergraph)}
    _emit(args, payload, hgio.format_text(entry.hypergraph))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--output", default=argparse.SUPPRESS, help="write the result to this file")
    common.add_argument("--seedless", action="store_true", default=argparse.SUPPRESS,
                        help="reserved; no command uses randomness")

    parser = _Parser(prog="hypercrit", parents=[common],
                     description="Exact analysis of matching-critical intersecting hypergraphs.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="invariants and class membership of a hypergraph file")
    p.add_argument("path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("transform", parents=[common], help="run a constructive transform")
    p.add_argument("op", choices=TRANSFORMS)
    p.add_argument("path")
    p.add_argument("--rank", type=int, default=None, help="target rank for uniformize-extend")
    p.add_argument("--trace", default=None, help="trace JSON Lines path (default: OUTPUT.trace.jsonl)")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("search", parents=[common], help="extremal order of a class at small rank")
    p.add_argument("--class", dest="cls", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--uniform", action="store_true")
    p.add_argument("--witness-only", action="store_true")
    p.add_argument("--time-budget", type=float, default=None, help="seconds before giving up exhaustiveness")
    p.add_argument("--jsonl", default=None, help="also stream every enumerated hypergraph to this file")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("catalog", parents=[common], help="print a named hypergraph")
    p.add_argument("name", help="one of: " + ", ".join(CATALOG_NAMES))
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("a subcommand is required: analyze, transform, search, catalog")
        for name, default in (("format", "json"), ("output", None), ("seedless", False)):
            if not hasattr(args, name):
                setattr(args, name, default)
        return args.func(args)
    except UsageError as exc:
        print(f"hypercrit: error: {exc}", file=sys.stderr)
        return 2
    except hgio.ParseError as exc:
        print(f"hypercrit: parse error: {exc}", file=sys.stderr)
        return 2
    except (OSError, HypergraphError) as exc:
        print(f"hypercrit: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
