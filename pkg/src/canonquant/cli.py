"""Command-line driver: ``canonquant --suite monopole --format json --out report.json``."""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .suites import DEFAULTS, SUITES, ConfigError, export_report, run_suite


def build_parser() -> argparse.ArgumentParser:
    d = DEFAULTS
    p = argparse.ArgumentParser(
        prog="canonquant",
        description="Run verification suites and emit a JSON or CSV report. "
        "Exit status: 0 all checks pass, 1 a check failed, 2 usage error.",
    )
    p.add_argument("--suite", choices=SUITES + ("all",), default="all", help="suite to run (default: all)")
    p.add_argument("--seed", type=int, default=d["seed"], help=f"seed for random samples (default: {d['seed']})")
    p.add_argument("--n", type=int, default=d["n"], help=f"monopole charge for grid checks (default: {d['n']})")
    p.add_argument("--jmax", type=float, default=d["jmax"], help=f"spectral truncation (default: {d['jmax']})")
    p.add_argument("--grid", default="x".join(map(str, d["grid"])), help="theta x phi grid, e.g. 128x256 (default: 128x256)")
    p.add_argument("--lmax", type=int, default=d["lmax"], help=f"RP^2 truncation (default: {d['lmax']})")
    p.add_argument("--steps", type=int, default=d["steps"], help=f"RK4 steps (default: {d['steps']})")
    p.add_argument("--dt", type=float, default=d["dt"], help=f"RK4 step size (default: {d['dt']})")
    p.add_argument("--format", choices=("json", "csv"), default="json", help="report format (default: json)")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--parallel", action="store_true", help="run checks concurrently; report order is unchanged")
    p.add_argument("--timings", action="store_true", help="include per-check runtimes in JSON output")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    config = {k: getattr(args, k) for k in ("seed", "n", "jmax", "grid", "lmax", "steps", "dt")}
    try:
        report = run_suite(args.suite, config, parallel=args.parallel)
    except ConfigError as exc:
        print(f"canonquant: error: {exc}", file=sys.stderr)
        return 2
    if args.out is None:
        text = report.to_json(args.timings) if args.format == "json" else report.to_csv()
        sys.stdout.write(text)
    else:
        try:
            export_report(report, args.format, args.out, include_timings=args.timings)
        except OSError as exc:
            print(f"canonquant: error: {exc}", file=sys.stderr)
            return 2
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
