"""Command-line front end.

Data goes to stdout (JSON lines by default), diagnostics to stderr.
Exit codes: 0 success, 1 counterexample found, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from .classgroup import class_group
from .criteria import cor22_divisibility, cor24_hypothesis, thm21_insolvability, thm23_check
from .diophantine import exponent_range, solve_all_n, solve_general
from .output import RECORD_FIELDS, dumps, record_row, write_rows
from .validator import SUITES, SweepConfig, Verdict, run_suite, summarize, verdict_of

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2

DEFAULT_Y_MAX = 10**5
DEFAULT_N_MAX = 19
# sweeps scan every D, so they get a smaller default search bound
DEFAULT_SWEEP_Y_MAX = 10**4


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"error: {name}={raw!r} is not an integer")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def _group_row(D: int) -> dict:
    g = class_group(D)
    return {"D": D, "disc": g.disc, "h": g.h, "exponent": g.exponent}


def cmd_classnum(args) -> int:
    print(dumps(_group_row(args.D)))
    return EXIT_OK


def cmd_classgroup(args) -> int:
    g = class_group(args.D)
    rows = [
        {"a": f.a, "b": f.b, "c": f.c, "order": o} for f, o in zip(g.forms, g.orders)
    ]
    write_rows(rows, sys.stdout, args.format, fields=("a", "b", "c", "order"))
    summary = _group_row(args.D)
    if args.format == "jsonl":
        print(dumps(summary))
    else:
        print(dumps(summary), file=sys.stderr)
    return EXIT_OK


def cmd_solve(args) -> int:
    y_max = args.y_max or _env_int("QUADCLASS_Y_MAX", DEFAULT_Y_MAX)
    if args.n is not None:
        if args.n < 2:
            raise ValueError("--n must be >= 2")
        sols = solve_general(args.D, args.n, y_max)
        exponents = [args.n]
    else:
        n_max = args.n_max or _env_int("QUADCLASS_N_MAX", DEFAULT_N_MAX)
        exponents = list(exponent_range(n_max, args.odd_only))
        if not exponents:
            raise ValueError("exponent range is empty")
        sols = solve_all_n(args.D, n_max, y_max, odd_only=args.odd_only)
    write_rows([s._asdict() for s in sols], sys.stdout, args.format, fields=("x", "y", "n"))
    summary = {"D": args.D, "exponents": exponents, "y_max": y_max, "count": len(sols)}
    if args.format == "jsonl":
        print(dumps({"summary": summary}))
    else:
        print(dumps({"summary": summary}), file=sys.stderr)
    return EXIT_OK


def cmd_check(args, parser) -> int:
    def need(*names):
        missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
        if missing:
            parser.error(f"criterion {args.criterion} requires {' '.join(missing)}")

    y_max = args.y_max or _env_int("QUADCLASS_Y_MAX", DEFAULT_Y_MAX)
    if args.criterion == "thm21":
        need("d", "n")
        report = thm21_insolvability(args.d, args.n, y_max)
    elif args.criterion == "cor22":
        need("d", "n")
        report = cor22_divisibility(args.d, args.n, y_max)
    elif args.criterion == "thm23":
        need("x", "p", "n")
        report = thm23_check(args.x, args.p, args.n)
    else:
        need("x", "y", "n")
        report = cor24_hypothesis(args.x, args.y, args.n)
    verdict = verdict_of(report)
    out = report.to_dict()
    out["verdict"] = verdict.value
    print(dumps(out))
    return EXIT_COUNTEREXAMPLE if verdict is Verdict.COUNTEREXAMPLE else EXIT_OK


# thm23 at n = 7 means class groups of |disc| up to 4 * 13^7; keep the default grid desk-sized
DEFAULT_N_SETS = {"thm21": (3, 5, 7), "cor22": (3, 5, 7), "thm23": (3, 5), "golden": (3,)}


def cmd_sweep(args) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    y_max = args.y_max or _env_int("QUADCLASS_Y_MAX", DEFAULT_SWEEP_Y_MAX)
    records = []
    for suite in suites:
        cfg = SweepConfig(
            d_min=args.d_min,
            d_max=args.d_max,
            n_set=tuple(args.n or DEFAULT_N_SETS[suite]),
            p_max=args.p_max,
            x_max=args.x_max,
            y_max=y_max,
        )
        records.extend(run_suite(suite, cfg, jobs=args.jobs))
    write_rows((record_row(r) for r in records), sys.stdout, args.format, fields=RECORD_FIELDS)
    summary = summarize(records)
    if args.format == "jsonl":
        print(dumps(summary))
    else:
        print(dumps(summary), file=sys.stderr)
    return EXIT_COUNTEREXAMPLE if summary[Verdict.COUNTEREXAMPLE.value] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quadclass",
        description="Class groups of Q(sqrt(-D)) and the equation x^2 + D = y^n.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")

    p = sub.add_parser("classnum", help="class number and exponent of Q(sqrt(-D))")
    p.add_argument("D", type=_positive)

    p = sub.add_parser("classgroup", help="reduced forms of Q(sqrt(-D)) with their orders")
    p.add_argument("D", type=_positive)
    add_format(p)

    p = sub.add_parser("solve", help="solutions of x^2 + D = y^n with y <= y-max")
    p.add_argument("D", type=_positive)
    p.add_argument("--n", type=_int, help="single exponent")
    p.add_argument("--n-max", type=_positive, help="largest exponent (default 19, env QUADCLASS_N_MAX)")
    p.add_argument("--y-max", type=_positive, help="largest y (default 1e5, env QUADCLASS_Y_MAX)")
    p.add_argument("--odd-only", action="store_true", help="odd exponents only")
    add_format(p)

    p = sub.add_parser("check", help="evaluate one criterion and print its report")
    p.add_argument("--criterion", required=True, choices=("thm21", "cor22", "thm23", "cor24"))
    p.add_argument("--d", type=_int)
    p.add_argument("--n", type=_int)
    p.add_argument("--x", type=_int)
    p.add_argument("--p", type=_int)
    p.add_argument("--y", type=_int)
    p.add_argument("--y-max", type=_positive)

    p = sub.add_parser("sweep", help="validation sweep over a parameter grid")
    p.add_argument("--suite", required=True, choices=("thm21", "thm23", "cor22", "golden", "all"))
    p.add_argument("--d-min", type=_positive, default=1)
    p.add_argument("--d-max", type=_positive, default=200)
    p.add_argument("--n", type=_int, action="append", help="odd exponent; repeatable (default 3 5 7, thm23: 3 5)")
    p.add_argument("--p-max", type=_positive, default=13)
    p.add_argument("--x-max", type=_positive, default=20)
    p.add_argument("--y-max", type=_positive, help="solver bound (default 1e4, env QUADCLASS_Y_MAX)")
    p.add_argument("--jobs", type=_positive, default=1)
    add_format(p)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "classnum":
            return cmd_classnum(args)
        if args.command == "classgroup":
            return cmd_classgroup(args)
        if args.command == "solve":
            return cmd_solve(args)
        if args.command == "check":
            return cmd_check(args, parser)
        return cmd_sweep(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
