"""``ecbench`` command line: bench, verify and table subcommands.

Exit status: 0 on success, 1 when a verification suite fails, 2 on a
configuration or usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence

from .bench import (
    RECODINGS, TIMING_COLUMNS, BenchConfig, emit_csv, emit_markdown, format_table, run_bench, table_rows,
)
from .errors import ConfigError, UsageError
from .scalarmul import COORDINATE_SYSTEMS
from .verify import SUITES

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_CONFIG = 0, 1, 2


def _csv_list(choices: Optional[Sequence[str]] = None):
    def parse(text: str) -> List[str]:
        items = [t.strip() for t in text.split(",") if t.strip()]
        if choices is not None:
            bad = [t for t in items if t not in choices]
            if bad:
                raise argparse.ArgumentTypeError(f"unknown value(s) {bad}; choose from {list(choices)}")
        return items
    return parse


def _int_list(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ecbench", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bench", help="run scalar multiplications and tabulate operation counts")
    b.add_argument("--config", help="curve file or builtin name (default: one builtin curve per coordinate system)")
    b.add_argument("--coord", type=_csv_list(COORDINATE_SYSTEMS), default=list(COORDINATE_SYSTEMS))
    b.add_argument("--recode", type=_csv_list(RECODINGS), default=list(RECODINGS))
    b.add_argument("--w", type=_int_list, default=[4], help="window widths for wnaf/complement_window")
    b.add_argument("--scalars", type=int, default=100)
    b.add_argument("--seed", type=int, default=1)
    b.add_argument("--bits", type=int, default=160, help="scalar length; the MSB is always set")
    b.add_argument("--limb-bits", type=int, default=16, choices=(16, 32, 64))
    b.add_argument("--tripling", action="store_true", help="add inverted-Edwards rows with tripling")
    b.add_argument("--baseline", default="jacobian/binary", help="row label used for %% improvement")
    b.add_argument("--format", choices=("csv", "md"), default="csv")
    b.add_argument("--timing", action="store_true", help="add wall-time columns")

    v = sub.add_parser("verify", help="run the oracle cross-check suites")
    v.add_argument("--suite", choices=sorted(SUITES), action="append",
                   help="suite to run (repeatable; default: all)")
    v.add_argument("--config", help="curve file to check (config suite)")

    t = sub.add_parser("table", help="print the analytic cost-model table")
    t.add_argument("--m", type=int, default=160)
    t.add_argument("--w", type=_int_list, default=[3, 5, 10])
    t.add_argument("--format", choices=("csv", "md"), default="md")
    return ap


def cmd_bench(args, out=None) -> int:
    out = out or sys.stdout
    cfg = BenchConfig(curve_file=args.config, coords=args.coord, recodings=args.recode, widths=args.w,
                      scalars=args.scalars, seed=args.seed, scalar_bits=args.bits, limb_bits=args.limb_bits,
                      timing=args.timing, tripling=args.tripling, baseline=args.baseline)
    rows = run_bench(cfg)
    if args.format == "md":
        out.write(emit_markdown(rows))
    else:
        out.write(emit_csv(rows, exclude=() if args.timing else TIMING_COLUMNS))
    return EXIT_OK


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    names = args.suite or list(SUITES)
    status = EXIT_OK
    for name in names:
        res = SUITES[name](args.config) if name == "config" else SUITES[name]()
        mark = "PASS" if res.ok else "FAIL"
        out.write(f"{mark} {name}: {res.passed} passed, {res.failed} failed\n")
        for msg in res.messages:
            out.write(f"    {msg}\n")
        out.flush()
        if not res.ok:
            status = EXIT_VERIFY_FAILED
    return status


def cmd_table(args, out=None) -> int:
    out = out or sys.stdout
    out.write(format_table(table_rows(args.m, args.w), args.format))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"bench": cmd_bench, "verify": cmd_verify, "table": cmd_table}[args.command]
    try:
        return handler(args)
    except (ConfigError, UsageError) as exc:
        print(f"ecbench: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
