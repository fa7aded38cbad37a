"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input/parse error,
3 column cap exceeded, 4 functional precondition failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bezout import product_bound, product_functional
from .errors import ColumnCapExceeded, NotAnnihilatingError, PreconditionError
from .functional import Functional, functional_apply
from .ideal import DEFAULT_COLUMN_CAP, annihilates, root_functional_basis
from .ring import PolyParseError, SystemProfile, poly_parse
from .verify import SUITE_NAMES, Params, run_all, run_suite

EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_PRECONDITION = 4


class InputError(Exception):
    pass


def _read_system(path: str) -> SystemProfile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read system file: {exc}") from exc
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    try:
        return SystemProfile.parse(lines)
    except PolyParseError as exc:
        raise InputError(f"{path}: {exc}") from exc
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _read_functional(path: str) -> Functional:
    try:
        return Functional.from_json(Path(path).read_text())
    except (OSError, KeyError, ValueError, TypeError) as exc:
        raise InputError(f"{path}: not a functional file ({exc})") from exc


def _emit(data) -> None:
    print(json.dumps(data, indent=2))


def cmd_basis(args) -> int:
    f = _read_system(args.system)
    basis = root_functional_basis(f, args.degree, args.cap)
    _emit(basis.to_json())
    return 0


def cmd_extend(args) -> int:
    f = _read_system(args.system)
    L1 = _read_functional(args.l1)
    L2 = _read_functional(args.l2)
    if L1.nvars != f.nvars or L2.nvars != f.nvars:
        raise InputError("functional and system variable counts differ")
    L = product_functional(L1, args.delta1, L2, args.delta2, f)
    top = product_bound(f, args.delta1, args.delta2)
    _emit({
        "system": f.to_lines(),
        "delta_f": f.delta_f,
        "delta1": args.delta1,
        "delta2": args.delta2,
        "functional": L.to_json(),
        "verified_annihilation_degree": top if annihilates(L, f, top) else None,
    })
    return 0


def cmd_eval(args) -> int:
    L = _read_functional(args.functional)
    try:
        F = poly_parse(args.poly, L.nvars)
    except PolyParseError as exc:
        raise InputError(str(exc)) from exc
    value = functional_apply(L, F)
    text = str(value)
    if args.json:
        _emit({"functional": args.functional, "poly": str(F), "value": text})
    else:
        print(text)
    return 0


def cmd_verify(args) -> int:
    params = Params(nmax=args.nmax, degmax=args.degmax, cap=args.cap,
                    corrupt=args.corrupt_derivative)
    command = " ".join(["verify"] + args.argv)
    if args.suite == "all":
        report = run_all(args.seed, args.cases, params, jobs=args.jobs, command=command)
    else:
        report = run_suite(args.suite, args.seed, args.cases, params, jobs=args.jobs,
                           command=command)
    print(report.to_json())
    return 0 if report.ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootext", description="Bounded root functionals of square polynomial systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--cap", type=int, default=DEFAULT_COLUMN_CAP,
                       help="maximum number of monomial columns")

    p = sub.add_parser("basis", help="basis of bounded root functionals")
    p.add_argument("--system", required=True, help="file with one polynomial per line")
    p.add_argument("--degree", "-D", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("extend", help="product functional of two bounded root functionals")
    p.add_argument("--system", required=True)
    p.add_argument("--l1", required=True, help="functional JSON file")
    p.add_argument("--delta1", type=int, required=True)
    p.add_argument("--l2", required=True, help="functional JSON file")
    p.add_argument("--delta2", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("eval", help="apply a functional to a polynomial")
    p.add_argument("--functional", required=True)
    p.add_argument("--poly", required=True)
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="seeded randomized verification suites")
    p.add_argument("--suite", choices=SUITE_NAMES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=50)
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--degmax", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--corrupt-derivative", action="store_true", help=argparse.SUPPRESS)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = argv[1:]
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ColumnCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NotAnnihilatingError as exc:
        print(f"error: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except PreconditionError as exc:
        print(f"error: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
