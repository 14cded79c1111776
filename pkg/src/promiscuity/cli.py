"""Command-line interface.

Subcommands
-----------
fourmode report   one-point entanglement report (json or csv)
fourmode sweep    grid sweep written as a CSV file
qudit report      tangle/bound report of the d-family member
verify            run every property suite and report counts

All numeric output is rendered with 12 significant digits and newline
"\n" line endings, so identical inputs produce byte-identical output.
Exit codes: 0 success, 1 internal inconsistency or failed verification,
2 bad arguments.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import contangle, four_mode, qudit, verification
from .config import GridConfig, load_config

THREADS_ENV = "PROMISCUITY_THREADS"

REPORT_FIELDS = (
    "a",
    "s",
    "tau_12",
    "tau_13",
    "tau_14",
    "tau_23",
    "tau_24",
    "tau_34",
    "tau_1_rest",
    "tau_2_rest",
    "tau_3_rest",
    "tau_4_rest",
    "tau_pairblock",
    "tau_res",
    "tau_tri_bound",
    "monogamy_ok",
    "strong_monogamy_ok",
    "near_threshold",
    "consistent",
    "max_route_deviation",
)

SWEEP_FIELDS = (
    "a",
    "s",
    "tau_12",
    "tau_23",
    "tau_14",
    "tau_pairblock",
    "tau_1_rest",
    "tau_res",
    "tau_tri_bound",
    "monogamy_ok",
    "strong_monogamy_ok",
)

QUDIT_FIELDS = (
    "d",
    "three_tangle",
    "three_tangle_exact",
    "pairwise_tangle",
    "pairwise_tangle_exact",
    "one_vs_rest_tangle",
    "one_vs_rest_tangle_exact",
    "monogamy_gap",
    "monogamy_gap_exact",
    "nongaussianity",
    "squashed_one_vs_rest",
    "squashed_tripartite_lower",
    "squashed_tripartite_lower_exact",
    "squashed_pairwise_form",
    "squashed_pairwise_witness",
)


def _round12(value: float) -> float:
    # 12 significant digits; the shortened float re-renders identically
    return float(f"{value:.12g}")


def _text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _json_ready(value):
    if isinstance(value, bool) or not isinstance(value, float):
        return value
    return _round12(value)


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        Path(out_path).write_bytes(text.encode("ascii"))


def _report_row(params: contangle.SqueezingParams) -> dict:
    report = four_mode.full_report(params)
    tau = report.pairwise_contangle
    rest = report.one_vs_rest_contangle
    return {
        "a": params.a,
        "s": params.s,
        "tau_12": tau[(1, 2)],
        "tau_13": tau[(1, 3)],
        "tau_14": tau[(1, 4)],
        "tau_23": tau[(2, 3)],
        "tau_24": tau[(2, 4)],
        "tau_34": tau[(3, 4)],
        "tau_1_rest": rest[1],
        "tau_2_rest": rest[2],
        "tau_3_rest": rest[3],
        "tau_4_rest": rest[4],
        "tau_pairblock": report.interpair_contangle,
        "tau_res": report.residual,
        "tau_tri_bound": report.tripartite_bound,
        "monogamy_ok": report.monogamy_ok,
        "strong_monogamy_ok": report.strong_monogamy_ok,
        "near_threshold": report.near_threshold,
        "consistent": report.consistent,
        "max_route_deviation": report.max_route_deviation,
    }


def _format_table(fields: tuple[str, ...], row: dict, style: str) -> str:
    if style == "csv":
        header = ",".join(fields)
        values = ",".join(_text(row[name]) for name in fields)
        return f"{header}\n{values}\n"
    payload = {name: _json_ready(row[name]) for name in fields}
    return json.dumps(payload, indent=2) + "\n"


def _sweep_row(params: contangle.SqueezingParams) -> str:
    strong = contangle.strong_monogamy_check(params)
    values = {
        "a": params.a,
        "s": params.s,
        "tau_12": contangle.pairwise_contangle(params, (1, 2)),
        "tau_23": contangle.pairwise_contangle(params, (2, 3)),
        "tau_14": contangle.pairwise_contangle(params, (1, 4)),
        "tau_pairblock": contangle.interpair_contangle(params),
        "tau_1_rest": contangle.one_vs_rest_contangle(params, 1),
        "tau_res": strong.residual,
        "tau_tri_bound": strong.tripartite_bound,
        "monogamy_ok": contangle.monogamy_residual(params) >= -contangle.MONOGAMY_TOL,
        "strong_monogamy_ok": strong.ok,
    }
    return ",".join(_text(values[name]) for name in SWEEP_FIELDS)


def _worker_count(parser: argparse.ArgumentParser) -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return min(4, os.cpu_count() or 1)
    try:
        count = int(raw)
        if count < 1:
            raise ValueError
    except ValueError:
        parser.error(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return count


def _nonnegative(label: str):
    def parse(text: str) -> float:
        try:
            value = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{label} must be a number, got {text!r}")
        if not value >= 0:
            raise argparse.ArgumentTypeError(f"{label} must be non-negative, got {text}")
        return value

    return parse


def cmd_fourmode_report(args, parser) -> int:
    params = contangle.SqueezingParams(args.a, args.s)
    row = _report_row(params)
    _emit(_format_table(REPORT_FIELDS, row, args.format), None)
    if not row["consistent"]:
        print("error: closed-form and spectral routes disagree", file=sys.stderr)
        return 1
    return 0


def cmd_fourmode_sweep(args, parser) -> int:
    if args.steps < 2:
        parser.error(f"--steps must be >= 2, got {args.steps}")
    cfg = GridConfig(
        a_min=args.a_min, a_max=args.a_max, s_min=args.s_min, s_max=args.s_max,
        density=args.steps,
    )
    if args.config:
        cfg = load_config(args.config, base=cfg)
    s_values = cfg.s_values()

    def one_row_block(a: float) -> list[str]:
        return [_sweep_row(contangle.SqueezingParams(a, s)) for s in s_values]

    workers = _worker_count(parser)
    a_values = cfg.a_values()
    if workers == 1:
        blocks = [one_row_block(a) for a in a_values]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(one_row_block, a_values))
    lines = [",".join(SWEEP_FIELDS)]
    for block in blocks:
        lines.extend(block)
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_qudit_report(args, parser) -> int:
    try:
        report = qudit.tangle_report(args.d)
        bounds = qudit.squashed_bounds(args.d)
    except ValueError as exc:
        parser.error(str(exc))
    row = {
        "d": report.d,
        "three_tangle": float(report.three_tangle),
        "three_tangle_exact": str(report.three_tangle),
        "pairwise_tangle": float(report.pairwise_tangle),
        "pairwise_tangle_exact": str(report.pairwise_tangle),
        "one_vs_rest_tangle": float(report.one_vs_rest_tangle),
        "one_vs_rest_tangle_exact": str(report.one_vs_rest_tangle),
        "monogamy_gap": float(report.monogamy_gap),
        "monogamy_gap_exact": str(report.monogamy_gap),
        "nongaussianity": report.nongaussianity,
        "squashed_one_vs_rest": report.squashed_one_vs_rest,
        "squashed_tripartite_lower": float(report.squashed_tripartite_lower),
        "squashed_tripartite_lower_exact": str(report.squashed_tripartite_lower),
        "squashed_pairwise_form": bounds.pairwise_form,
        "squashed_pairwise_witness": bounds.pairwise_witness,
    }
    _emit(_format_table(QUDIT_FIELDS, row, args.format), None)
    return 0


def cmd_verify(args, parser) -> int:
    cfg = GridConfig(density=args.grid_density)
    if args.config:
        cfg = load_config(args.config, base=cfg)
    results = verification.run_all(cfg)
    failed = False
    for result in results:
        status = "ok" if result.ok else "FAIL"
        print(f"{result.name}: {result.checks - len(result.failures)}/{result.checks} {status}")
        if result.failures:
            failed = True
            shown = result.failures if args.verbose else result.failures[:1]
            for failure in shown:
                print(f"  first failure: {failure}" if not args.verbose else f"  {failure}")
    total = sum(r.checks for r in results)
    bad = sum(len(r.failures) for r in results)
    print(f"total: {total - bad}/{total} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="promiscuity",
        description="Entanglement sharing diagnostics for four-mode squeezed states "
        "and GHZ/W qudit families",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fourmode = sub.add_parser("fourmode", help="four-mode family diagnostics")
    fsub = fourmode.add_subparsers(dest="subcommand", required=True)

    report = fsub.add_parser("report", help="entanglement report at one (a, s) point")
    report.add_argument("--a", type=_nonnegative("a"), required=True, help="pair squeezing degree")
    report.add_argument("--s", type=_nonnegative("s"), required=True, help="interpair squeezing degree")
    report.add_argument("--format", choices=("json", "csv"), default="json")
    report.set_defaults(handler=cmd_fourmode_report)

    sweep = fsub.add_parser("sweep", help="grid sweep written to a CSV file")
    sweep.add_argument("--a-min", type=_nonnegative("a-min"), default=0.0)
    sweep.add_argument("--a-max", type=_nonnegative("a-max"), default=2.5)
    sweep.add_argument("--s-min", type=_nonnegative("s-min"), default=0.0)
    sweep.add_argument("--s-max", type=_nonnegative("s-max"), default=2.5)
    sweep.add_argument("--steps", type=int, default=26, help="grid points per axis (>= 2)")
    sweep.add_argument("--out", required=True, help="output CSV path")
    sweep.add_argument("--config", help="key = value file overriding grid settings")
    sweep.set_defaults(handler=cmd_fourmode_sweep)

    quditp = sub.add_parser("qudit", help="GHZ/W qudit family diagnostics")
    qsub = quditp.add_subparsers(dest="subcommand", required=True)
    qreport = qsub.add_parser("report", help="tangle and bound report for one d")
    qreport.add_argument("--d", type=int, required=True, help="family label (positive multiple of 4)")
    qreport.add_argument("--format", choices=("json", "csv"), default="json")
    qreport.set_defaults(handler=cmd_qudit_report)

    verify = sub.add_parser("verify", help="run every property suite")
    verify.add_argument("--grid-density", type=int, default=26, help="grid points per axis (>= 2)")
    verify.add_argument("--config", help="key = value file overriding grid settings")
    verify.add_argument("--verbose", action="store_true", help="print every failure, not just the first")
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "grid_density", None) is not None and args.grid_density < 2:
        parser.error(f"--grid-density must be >= 2, got {args.grid_density}")
    try:
        return args.handler(args, parser)
    except ValueError as exc:
        parser.error(str(exc))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
