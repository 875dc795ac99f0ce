"""Command-line entry point.

Exit status: 0 on success, 2 when a precondition fails, 3 when a computed
class function is not a character, 64 for invalid flags.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .characters import NotACharacter
from .engine import NotGoodMultidegree, gamma_n, xi_n
from .grading import ElementaryGrading
from .oracle import DEFAULT_CAP, CapExceeded, DegreeMismatch, GradedMatrixAlgebra, xi_n_oracle
from .partitions import parse_partition
from .published import PatternNotCovered
from .report import (badseq_report, character_report, compare_gradings, degree_report,
                     emit_comparison, emit_report, is_phi, multidegree_report,
                     tables_report)

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_NOT_A_CHARACTER = 3
EXIT_USAGE = 64

COMMANDS = ("compute", "oracle", "tables", "badseq", "verify", "compare")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cocharlab",
                     description="Y-proper graded cocharacters of upper-triangular matrices.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--m", type=int, required=True, help="matrix size / cyclic group order")
    parser.add_argument("--grading", default="phi", help="phi, psi or g1,g2,...,gm")
    parser.add_argument("--gradings", default="phi,psi", help="two gradings for compare")
    size = parser.add_mutually_exclusive_group()
    size.add_argument("--n", type=int, help="total degree (badseq: maximal sequence length)")
    size.add_argument("--multidegree", type=_int_list)
    parser.add_argument("--lambda", dest="lam", type=_partition)
    parser.add_argument("--format", default="json", choices=("json", "csv", "latex"))
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help=f"oracle limit on the total degree (default {DEFAULT_CAP})")
    return parser


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise UsageError(message)


def _split_gradings(text: str) -> tuple[str, str]:
    """``phi,psi`` or explicit tuples separated by ``;``."""
    parts = text.split(";") if ";" in text else text.split(",")
    _require(len(parts) == 2, "--gradings needs two gradings, e.g. phi,psi or 0,0,1;0,1,2")
    return parts[0], parts[1]


def run(argv: Sequence[str], out=sys.stdout) -> int:
    args = build_parser().parse_args(argv)
    _require(args.m >= 1, "--m must be positive")
    _require(args.cap >= 0, "--cap must be nonnegative")
    try:
        grading = ElementaryGrading.parse(args.m, args.grading)
    except ValueError as exc:
        raise UsageError(f"--grading: {exc}")
    fmt = args.format
    cmd = args.command

    if cmd == "compare":
        _require(args.n is not None, "compare needs --n")
        pair = _split_gradings(args.gradings)
        try:
            for g in pair:
                ElementaryGrading.parse(args.m, g)
        except ValueError as exc:
            raise UsageError(f"--gradings: {exc}")
        out.write(emit_comparison(compare_gradings(args.m, args.n, pair, args.cap), fmt))
        return EXIT_OK

    if cmd == "badseq":
        out.write(emit_report(badseq_report(grading, args.n), fmt))
        return EXIT_OK

    if cmd == "tables":
        _require(args.lam is not None or args.n is not None, "tables needs --n or --lambda")
        out.write(emit_report(tables_report(args.m, args.n, args.lam), fmt))
        return EXIT_OK

    _require(args.n is not None or args.multidegree is not None,
             f"{cmd} needs --n or --multidegree")
    if args.n is not None and args.n < 0:
        raise ValueError("n must be nonnegative")

    if cmd == "compute":
        if not is_phi(grading):
            raise ValueError("the formula engine covers the phi-grading only")
        if args.multidegree is not None:
            out.write(emit_report(multidegree_report(grading, args.multidegree,
                                                     with_oracle=False, strict=True), fmt))
        else:
            out.write(emit_report(character_report(
                grading, args.n, xi_n(args.m, args.n), gamma_n(args.m, args.n).total, "engine"), fmt))
        return EXIT_OK

    if cmd == "oracle":
        if args.multidegree is not None:
            out.write(emit_report(multidegree_report(grading, args.multidegree, with_engine=False,
                                                     cap=args.cap), fmt))
        else:
            r = xi_n_oracle(GradedMatrixAlgebra(grading), args.n, args.cap)
            out.write(emit_report(character_report(grading, args.n, r.xi, r.gamma, "oracle"), fmt))
        return EXIT_OK

    # verify
    if args.multidegree is not None:
        report = multidegree_report(grading, args.multidegree, cap=args.cap)
    else:
        report = degree_report(grading, args.n, cap=args.cap)
    out.write(emit_report(report, fmt))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        return run(argv)
    except UsageError as exc:
        build_parser().print_usage(sys.stderr)
        print(f"cocharlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotACharacter as exc:
        print(f"cocharlab: not a character: {exc}", file=sys.stderr)
        return EXIT_NOT_A_CHARACTER
    except (NotGoodMultidegree, CapExceeded, PatternNotCovered, DegreeMismatch,
            ValueError, IndexError) as exc:
        print(f"cocharlab: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
