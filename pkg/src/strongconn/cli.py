"""Command line front end.

Usage::

    strongconn INSTANCE.json [--stages validate,cointegral,...]
               [--format text|json] [--out PATH]
               [--dim-cap N] [--oracle-cap N]

Exit codes: 0 = every check passed, 1 = at least one FAIL entry,
2 = usage, parse or dependency error.
"""

from __future__ import annotations

import argparse
import sys

from .errors import DependencyError, ParseError, StrongConnError, TooLarge
from .fileformat import parse_instance
from .pipeline import STAGE_ORDER, emit_report, run_pipeline


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="strongconn",
        description="Verify entwined coalgebra extensions and construct "
                    "strong connection forms, exactly.")
    p.add_argument("instance", help="path to a JSON instance file")
    p.add_argument("--stages",
                   help="comma-separated subset of: " + ", ".join(STAGE_ORDER))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--dim-cap", type=int, default=32,
                   help="maximum dimension per base space (default 32)")
    p.add_argument("--oracle-cap", type=int, default=4096,
                   help="maximum unknown count for the brute-force oracle "
                        "(default 4096)")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    stages = None
    if args.stages:
        stages = [s.strip() for s in args.stages.split(",") if s.strip()]
    try:
        inst = parse_instance(args.instance, dim_cap=args.dim_cap)
        rep = run_pipeline(inst, stages, oracle_cap=args.oracle_cap)
        emit_report(rep, args.format, args.out)
    except (ParseError, TooLarge, DependencyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StrongConnError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
