"""Command-line front end: generate traces, replay them, audit the results.

Exit codes: 0 on success, 1 when any audit failed or a budget was exceeded,
2 on input errors (bad trace file, bad parameters).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .engine import InvalidBudgetError
from .harness import ENGINE, LOW_RECOURSE, RunResult, run_trace
from .trace import TraceError, UpdateTrace, generate_trace, parse_trace, serialize_trace

EXIT_OK = 0
EXIT_AUDIT_FAILED = 1
EXIT_INPUT_ERROR = 2


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "run":
            return _cmd_run(args)
        return _cmd_audit(args)
    except (TraceError, InvalidBudgetError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dynspanner",
        description="Replay edge-update traces through a dynamic spanner and audit it.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="replay a trace with periodic audits")
    run_p.add_argument("--trace", required=True, help="trace file path, or - for stdin")
    run_p.add_argument(
        "--algorithm", choices=[ENGINE, LOW_RECOURSE], default=ENGINE
    )
    run_p.add_argument(
        "--audit-every",
        type=int,
        default=None,
        metavar="K",
        help="audit every K updates (0: only at the end; default scales with n)",
    )
    run_p.add_argument(
        "--stretch-sample",
        type=int,
        default=None,
        metavar="S",
        help="BFS sources sampled per stretch audit (default: all up to n=512)",
    )
    run_p.add_argument("--json", action="store_true", help="print a one-line JSON summary")

    gen_p = sub.add_parser("gen", help="generate a trace")
    gen_p.add_argument("--n", type=int, required=True)
    gen_p.add_argument("--m", type=int, required=True)
    gen_p.add_argument("--deletions", type=int, required=True)
    gen_p.add_argument("--pattern", choices=["random", "adversarial"], default="random")
    gen_p.add_argument("--seed", type=int, default=0)
    gen_p.add_argument("--gamma", type=int, default=1)
    gen_p.add_argument("--out", default="-", help="output file (default stdout)")

    audit_p = sub.add_parser("audit", help="replay a trace and audit only the final state")
    audit_p.add_argument("--trace", required=True, help="trace file path, or - for stdin")
    audit_p.add_argument(
        "--algorithm", choices=[ENGINE, LOW_RECOURSE], default=ENGINE
    )
    audit_p.add_argument("--json", action="store_true", help="print a one-line JSON summary")
    return parser


def _load_trace(source: str) -> UpdateTrace:
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    return parse_trace(text)


def _cmd_gen(args: argparse.Namespace) -> int:
    trace = generate_trace(
        n=args.n,
        m=args.m,
        deletions=args.deletions,
        pattern=args.pattern,
        seed=args.seed,
        gamma=args.gamma,
    )
    text = serialize_trace(trace)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
        print(
            f"wrote {trace.insert_count} inserts, {trace.delete_count} deletes to {args.out}",
            file=sys.stderr,
        )
    return EXIT_OK


def _cmd_run(args: argparse.Namespace) -> int:
    trace = _load_trace(args.trace)
    result = run_trace(
        trace,
        algorithm=args.algorithm,
        audit_every=args.audit_every,
        stretch_sample=args.stretch_sample,
    )
    _print_result(result, as_json=args.json)
    return EXIT_OK if result.ok else EXIT_AUDIT_FAILED


def _cmd_audit(args: argparse.Namespace) -> int:
    trace = _load_trace(args.trace)
    result = run_trace(trace, algorithm=args.algorithm, audit_every=0)
    _print_result(result, as_json=args.json)
    return EXIT_OK if result.ok else EXIT_AUDIT_FAILED


def _print_result(result: RunResult, as_json: bool) -> None:
    for idx, report in result.audits:
        print(f"audit @ update {idx}:")
        for line in report.format().splitlines():
            print(f"  {line}")
    me = result.metrics
    print("metrics:")
    for key, value in me.counters().items():
        print(f"  {key} {value}")
    print(f"  wall_time_seconds {me.wall_time_seconds:.3f}")
    if me.oracle_update_calls or me.oracle_query_calls:
        upd = me.oracle_update_seconds / max(me.oracle_update_calls, 1)
        qry = me.oracle_query_seconds / max(me.oracle_query_calls, 1)
        print(f"  oracle_update_calls {me.oracle_update_calls}")
        print(f"  oracle_query_calls {me.oracle_query_calls}")
        print(f"  oracle_amortized_update_seconds {upd:.6f}")
        print(f"  oracle_amortized_query_seconds {qry:.6f}")
    print(f"result {'OK' if result.ok else 'AUDIT-FAILED'}")
    if as_json:
        summary = dict(me.counters())
        summary["ok"] = result.ok
        summary["wall_time_seconds"] = round(me.wall_time_seconds, 6)
        print(json.dumps(summary, sort_keys=True))


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
