"""Command-line front end: solve single files or check a table of them.

Prints one JSON object per check, shaped {"check", "subject", "pass",
"details"}, and exits 0 exactly when every printed check passed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .report import backends_agree, check_table
from .solver import BACKENDS, solve_file


def _print(rows: list[dict]) -> int:
    ok = True
    for row in rows:
        ok = ok and row["pass"]
        print(json.dumps(row))
    return 0 if ok else 1


def _cmd_solve(args) -> int:
    result = solve_file(args.file, backend=args.backend)
    ok = result.status in ("optimal", "optimal_inaccurate")
    return _print(
        [
            {
                "check": "sdp-solve",
                "subject": f"n={result.n}",
                "pass": ok,
                "details": {
                    "status": result.status,
                    "objective": None if math.isnan(result.objective) else result.objective,
                    "bound": None if math.isnan(result.bound) else result.bound,
                    "floor_bound": result.floor_bound,
                    "backend": result.backend,
                },
            }
        ]
    )


def _cmd_check_table(args) -> int:
    return _print(check_table(args.files, backend=args.backend))


def _cmd_agree(args) -> int:
    return _print([backends_agree(args.file)])


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sdp-solve",
        description="Solve exported sparse SDPA files and check the bound table.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one problem file")
    p.add_argument("file")
    p.add_argument("--backend", default="CLARABEL", choices=BACKENDS)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("check-table", help="compare floors against the bundled table")
    p.add_argument("files", nargs="+")
    p.add_argument("--backend", default="CLARABEL", choices=BACKENDS)
    p.set_defaults(func=_cmd_check_table)

    p = sub.add_parser("agree", help="cross-check the two solver backends on one file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_agree)

    return ap


def cli(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    return args.func(args)


def main() -> None:
    sys.exit(cli())


if __name__ == "__main__":
    main()
