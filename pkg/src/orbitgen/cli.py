"""Command-line surface: list, gen, verify, cycles, stats.

Exit codes: 0 success, 1 verification mismatch, 2 usage error or unknown
name, 3 attractor search exceeded its depth cap.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog, numtheory as nt
from .core import evaluate_range
from .errors import DepthExceeded, UnknownSystem
from .stats import format_report, frequency_report

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DEPTH = 3

# name -> (step map, enumeration bound below which every cycle has an
# element).  The digit-power bounds are the guaranteed-descent bounds;
# the other two rest on the published classification of their cycles.
_CYCLE_MAPS = {
    "digit_squares": (
        lambda n: nt.digit_map_sum(n, nt.DIGIT_SQUARES),
        nt.stewart_bound(nt.DIGIT_SQUARES)),
    "digit_fourth_powers": (
        lambda n: nt.digit_map_sum(n, nt.DIGIT_FOURTH_POWERS),
        nt.stewart_bound(nt.DIGIT_FOURTH_POWERS)),
    "digit_sum_square": (nt.digit_sum_square, 10_000),
    "shifted_digit_product": (nt.shifted_digit_product, 10_000),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitgen",
        description="Pseudorandom sequences from dynamical systems with "
                    "weak attractors.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list catalog systems")

    gen = sub.add_parser("gen", help="print generated values as a grid")
    _system_arg(gen, required=True)
    _count_arg(gen)
    gen.add_argument("--columns", type=int, default=40, help="values per line")
    gen.add_argument("--start", type=int, default=0,
                     help="offset into the enumeration")
    _depth_arg(gen)

    ver = sub.add_parser("verify", help="compare against golden tables")
    _system_arg(ver, required=False)
    ver.add_argument("--all", action="store_true",
                     help="verify every system that has a golden table")
    ver.add_argument("--fixtures", metavar="DIR",
                     help="directory of golden tables (default: packaged)")
    ver.add_argument("--allow-caveats", action="store_true",
                     help="report, but do not fail on, depth exhaustion in "
                          "conjecture-dependent systems")
    _depth_arg(ver)

    cyc = sub.add_parser("cycles", help="enumerate all cycles of a digit map")
    cyc.add_argument("map", help="one of: " + ", ".join(_CYCLE_MAPS))
    cyc.add_argument("--bound", type=int,
                     help="override the enumeration bound")

    st = sub.add_parser("stats", help="frequency report for generated values")
    _system_arg(st, required=True)
    _count_arg(st)
    _depth_arg(st)

    return parser


def _system_arg(p, required):
    p.add_argument("-s", "--system", required=required, metavar="NAME",
                   help="catalog system name (see `orbitgen list`)")


def _count_arg(p):
    p.add_argument("-n", "--count", type=int, default=None,
                   help="number of values (default: golden-table length)")


def _depth_arg(p):
    p.add_argument("--max-depth", type=int, default=None,
                   help="override the attractor-search cap (can break "
                        "conjecture-dependent systems)")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse printed its own message
        return int(exc.code or 0)
    try:
        if args.command == "list":
            return _cmd_list()
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "cycles":
            return _cmd_cycles(args)
        if args.command == "stats":
            return _cmd_stats(args)
    except UnknownSystem as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DepthExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEPTH
    raise AssertionError(f"unhandled command {args.command!r}")


def _cmd_list() -> int:
    for spec in catalog.list_systems():
        line = f"{spec.name:32} {spec.description}"
        if spec.caveat:
            line += f" [caveat: {spec.caveat}]"
        print(line)
    return EXIT_OK


def _generate(args) -> list[int]:
    spec = catalog.get(args.system)
    count = args.count if args.count is not None else spec.default_count
    if count < 0:
        raise ValueError("count must be >= 0")
    start = getattr(args, "start", 0)
    system, states = catalog.build(args.system, count=start + count,
                                   max_depth=args.max_depth)
    return evaluate_range(system, states[start:])


def _cmd_gen(args) -> int:
    values = _generate(args)
    columns = max(1, args.columns)
    for i in range(0, len(values), columns):
        print(" ".join(str(v) for v in values[i:i + columns]))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.all == (args.system is not None):
        print("error: pass exactly one of --system or --all", file=sys.stderr)
        return EXIT_USAGE
    if args.all:
        names = [s.name for s in catalog.list_systems() if s.golden_len > 0]
        skipped = [s.name for s in catalog.list_systems() if s.golden_len == 0]
    else:
        names, skipped = [args.system], []
    worst = EXIT_OK
    for name in names:
        spec = catalog.get(name)
        try:
            report = catalog.verify(name, fixtures_dir=args.fixtures,
                                    max_depth=args.max_depth)
        except DepthExceeded as exc:
            if spec.caveat and args.allow_caveats:
                print(f"{name}: DEPTH EXCEEDED (caveat system, reported "
                      f"only): {exc}")
                continue
            print(f"error: {name}: {exc}", file=sys.stderr)
            return EXIT_DEPTH
        if report.ok:
            print(f"{name}: pass, {report.matched}/{report.total} match")
        else:
            print(f"{name}: FAIL, {report.matched}/{report.total} match; "
                  f"first mismatch at index {report.first_mismatch}: "
                  f"computed {report.computed}, expected {report.expected}")
            worst = max(worst, EXIT_MISMATCH)
    for name in skipped:
        print(f"{name}: skipped (no golden table)")
    return worst


def _cmd_cycles(args) -> int:
    entry = _CYCLE_MAPS.get(args.map)
    if entry is None:
        print(f"error: unknown map {args.map!r}; choose from "
              f"{', '.join(_CYCLE_MAPS)}", file=sys.stderr)
        return EXIT_USAGE
    step, bound = entry
    cs = nt.enumerate_cycles(step, args.bound or bound)
    print(" ".join("(" + " ".join(str(v) for v in c) + ")" for c in cs.cycles))
    print(f"bound: {cs.bound}")
    return EXIT_OK


def _cmd_stats(args) -> int:
    values = _generate(args)
    spec = catalog.get(args.system)
    print(f"system       {spec.name}")
    print(format_report(frequency_report(values, spec.alphabet)))
    return EXIT_OK


def app() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    app()
