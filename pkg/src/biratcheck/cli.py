"""Command-line interface: ``biratcheck COMMAND FILE [FILE] [flags]``.

Exit codes: 0 success, 2 parse or validation error, 3 indeterminate verdict
under ``--strict``.  Nothing is written to stdout on a nonzero exit.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys

from .config import AnalysisConfig
from .problem import ProblemError, load_primes, load_problem
from .ratmap import DatumError
from .report import COMMANDS, TWO_FILE_COMMANDS, is_indeterminate, print_report, run
from .ring import FieldSpec

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INDETERMINATE = 3

_HELP = {
    "image": "image ideal and its dimension",
    "jdrank": "Jacobian dual rank data",
    "check-birational": "full birationality report with inverse and sufficient tests",
    "inverse": "extract and verify the inverse map",
    "linear-rank": "linear syzygy rank test (source P^n only)",
    "sgd": "semilinear generation degree",
    "compose": "compose G after F (G over the target variables of F)",
    "verify-inverse": "check that G inverts F",
    "restrict": "restrict the map to each supplied minimal prime",
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="biratcheck",
                                 description="Birationality of rational maps via the Jacobian dual rank.")
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name in COMMANDS:
        sp = sub.add_parser(name, help=_HELP[name])
        sp.add_argument("file", help="problem file (text or JSON)")
        if name in TWO_FILE_COMMANDS:
            sp.add_argument("second", metavar="G_FILE", help="problem file over the target ring")
        sp.add_argument("--field", type=int, metavar="P",
                        help="override the characteristic (0 or a prime)")
        sp.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
        sp.add_argument("--strict", action="store_true",
                        help="exit with status 3 on an indeterminate verdict")
        sp.add_argument("--degree-cap", type=int, metavar="N",
                        help="degree cap of the null-space inverse search")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--primes", metavar="FILE", help="minimal primes of the source ideal")
        sp.add_argument("--timings", action="store_true",
                        help="add per-phase wall times (makes output nondeterministic)")
    return ap


def _fail(msg: str, code: int) -> int:
    print(f"biratcheck: error: {msg}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = AnalysisConfig(characteristic=args.field, order=args.order,
                             degree_cap=args.degree_cap, strict=args.strict,
                             timings=args.timings, output_format=args.format)
        if args.field is not None:
            FieldSpec(args.field)
        files = [args.file] + ([args.second] if args.command in TWO_FILE_COMMANDS else [])
        problems = [load_problem(p) for p in files]
        if args.field is not None:
            problems = [dataclasses.replace(p, characteristic=args.field) for p in problems]
        primes = load_primes(args.primes) if args.primes else None
        report = run(args.command, problems, cfg, primes)
    except (ProblemError, DatumError, ValueError) as exc:
        return _fail(str(exc), EXIT_INPUT)
    if cfg.strict and is_indeterminate(report):
        return _fail("indeterminate verdict (Jacobian dual rank undefined)", EXIT_INDETERMINATE)
    sys.stdout.write(print_report(report, cfg.output_format))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
