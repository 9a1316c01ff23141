"""Command line: evaluate expressions with the demo parser, run law suites."""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import catalog, laws
from .core import Ok
from .parsec import EvaluationError, parse_expr


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="higherkind", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="evaluate an arithmetic expression")
    p.add_argument("expr")

    l = sub.add_parser("laws", help="run algebraic law suites")
    l.add_argument("--suite", default="all", choices=("all",) + catalog.SUITES)
    l.add_argument("--instance", default="all", choices=("all",) + catalog.instance_names())
    l.add_argument("--seed", type=int, default=laws.DEFAULT_SEED)
    l.add_argument("--cases", type=int, default=laws.DEFAULT_CASES)
    l.add_argument("--json", action="store_true", help="one JSON object per law")

    sub.add_parser("list-instances", help="print instance names")
    return ap


def _parse(expr: str) -> int:
    r = parse_expr(expr)
    if isinstance(r, Ok):
        print(r.value)
        return 0
    err = r.error
    if isinstance(err, EvaluationError):
        print("evaluation error: %s" % err.message, file=sys.stderr)
    else:
        print("parse error at %d: expected %s" % (err.offset, err.expected), file=sys.stderr)
    return 1


def _laws(args: argparse.Namespace, ap: argparse.ArgumentParser) -> int:
    if args.cases < 0:
        ap.error("--cases must be non-negative")
    if args.instance != "all" and args.suite != "all":
        entry = catalog.ENTRIES[args.instance]
        if args.suite not in entry.suites():
            ap.error("suite %r does not apply to instance %r (available: %s)"
                     % (args.suite, args.instance, ", ".join(entry.suites())))
    reports = catalog.run_suites(args.suite, args.instance, seed=args.seed, cases=args.cases)
    if not reports:
        ap.error("no %s suite applies to the selected instances" % args.suite)
    for report in reports:
        print(report.to_json_lines() if args.json else report.render())
    return 0 if all(r.passed for r in reports) else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = _parser()
    args = ap.parse_args(argv)
    if args.command == "parse":
        return _parse(args.expr)
    if args.command == "laws":
        return _laws(args, ap)
    for name in catalog.instance_names():
        print(name)
    return 0


if __name__ == "__main__":
    sys.exit(main())
