"""Command-line front end; all results print as exact fractions.

Exit codes: 0 success, 1 domain/validation error, 2 parse error.
"""

import argparse
import sys
from fractions import Fraction

from . import selftest
from .cocycle import tau_sp
from .errors import ParseError
from .fibered import (
    euler_contribution,
    geography_convert,
    geography_invert,
    hyperelliptic_twist_value,
    load_fibration,
    local_signature,
    total_euler,
    total_signature,
)
from .genus1 import SL2Element, phi1, dedekind_sum, rademacher
from .matrix import parse_matrix
from .presentations import (
    Unbounded,
    class_order,
    load_presentation,
    synthesize_meyer,
)
from .symplectic import SymplecticMatrix

MAX_CLI_WORD_LETTERS = 10_000


def _fmt(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _symplectic_arg(text: str, g: int | None = None) -> SymplecticMatrix:
    mat = parse_matrix(text)
    m = SymplecticMatrix(mat)
    if g is not None and m.g != g:
        raise ValueError(f"matrix has genus {m.g}, but -g {g} was given")
    return m


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational number {text!r}") from None


def _cmd_tau(args) -> int:
    a = _symplectic_arg(args.a, args.genus)
    b = _symplectic_arg(args.b, args.genus)
    print(_fmt(tau_sp(a, b)))
    return 0


def _cmd_phi1(args) -> int:
    print(_fmt(phi1(_symplectic_arg(args.matrix, 1))))
    return 0


def _cmd_dedekind(args) -> int:
    print(_fmt(dedekind_sum(args.a, args.c)))
    return 0


def _cmd_rademacher(args) -> int:
    m = _symplectic_arg(args.matrix, 1)
    print(_fmt(rademacher(SL2Element.from_matrix(m))))
    return 0


def _cmd_order(args) -> int:
    p = load_presentation(args.presentation)
    order = class_order(p)
    print("infinite" if isinstance(order, Unbounded) else str(order.n))
    return 0


def _cmd_phi(args) -> int:
    p = load_presentation(args.presentation)
    word = p.word(args.word)
    if len(word) > MAX_CLI_WORD_LETTERS:
        raise ValueError(
            f"word has {len(word)} letters; the CLI caps words at {MAX_CLI_WORD_LETTERS}"
        )
    print(_fmt(synthesize_meyer(p)(word)))
    return 0


def _cmd_local_sig(args) -> int:
    fd = load_fibration(args.fibration, data_dir=args.data)
    for k, germ in enumerate(fd.germs):
        label = germ.label or f"germ {k}"
        print(f"{label}: {_fmt(local_signature(germ, fd.genus, data_dir=args.data))}")
    print(f"total: {_fmt(total_signature(fd, data_dir=args.data))}")
    return 0


def _cmd_euler(args) -> int:
    if args.eps is not None and args.chi is not None:
        raise ValueError("give either --eps or --chi, not both")
    if args.eps is not None:
        contributions = args.eps
    elif args.chi is not None:
        contributions = [euler_contribution(chi, args.genus) for chi in args.chi]
    else:
        contributions = []
    print(_fmt(total_euler(args.genus, args.base, contributions)))
    return 0


def _cmd_geo(args) -> int:
    forward = args.ksq is not None or args.chi_struct is not None
    backward = args.sign is not None or args.chi_top is not None
    if forward == backward:
        raise ValueError("give exactly one of (--ksq, --chi-struct) or (--sign, --chi-top)")
    if forward:
        if args.ksq is None or args.chi_struct is None:
            raise ValueError("--ksq and --chi-struct go together")
        sign, chi_top = geography_convert(args.ksq, args.chi_struct)
        print(f"sign={_fmt(sign)} chi_top={_fmt(chi_top)}")
    else:
        if args.sign is None or args.chi_top is None:
            raise ValueError("--sign and --chi-top go together")
        k_sq, chi_struct = geography_invert(args.sign, args.chi_top)
        print(f"ksq={_fmt(k_sq)} chi_struct={_fmt(chi_struct)}")
    return 0


def _cmd_twist_value(args) -> int:
    if args.nonsep and args.sep is not None:
        raise ValueError("give either --nonsep or --sep h, not both")
    print(_fmt(hyperelliptic_twist_value(args.genus, args.sep)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meyersig",
        description="Exact signature cocycle, Meyer function, and local-signature computations.",
    )
    parser.add_argument("--data", metavar="DIR", help="override the embedded data files")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized subcommands")
    parser.add_argument(
        "--selftest", action="store_true", help="run the invariant suites and exit"
    )
    sub = parser.add_subparsers(dest="command")

    s = sub.add_parser("tau", help="signature cocycle tau(A, B)")
    s.add_argument("-g", dest="genus", type=int, default=None)
    s.add_argument("a", help="matrix, e.g. \"1,1;0,1\" or JSON [[1,1],[0,1]]")
    s.add_argument("b")
    s.set_defaults(func=_cmd_tau)

    s = sub.add_parser("phi1", help="genus-1 Meyer function of a matrix")
    s.add_argument("matrix")
    s.set_defaults(func=_cmd_phi1)

    s = sub.add_parser("dedekind", help="Dedekind sum s(a, c)")
    s.add_argument("a", type=int)
    s.add_argument("c", type=int)
    s.set_defaults(func=_cmd_dedekind)

    s = sub.add_parser("rademacher", help="Rademacher function of a matrix")
    s.add_argument("matrix")
    s.set_defaults(func=_cmd_rademacher)

    s = sub.add_parser("order", help="order of the signature class of a presentation")
    s.add_argument("-p", dest="presentation", required=True, metavar="FILE")
    s.set_defaults(func=_cmd_order)

    s = sub.add_parser("phi", help="synthesized Meyer function on a word")
    s.add_argument("-p", dest="presentation", required=True, metavar="FILE")
    s.add_argument("word")
    s.set_defaults(func=_cmd_phi)

    s = sub.add_parser("local-sig", help="local signatures and total of a fibration file")
    s.add_argument("-f", dest="fibration", required=True, metavar="FILE")
    s.set_defaults(func=_cmd_local_sig)

    s = sub.add_parser("euler", help="Euler number of a fibered 4-manifold")
    s.add_argument("-g", dest="genus", type=int, required=True)
    s.add_argument("-b", dest="base", type=int, required=True)
    s.add_argument("--eps", type=int, nargs="*", default=None, help="Euler contributions")
    s.add_argument("--chi", type=int, nargs="*", default=None, help="singular-fiber Euler numbers")
    s.set_defaults(func=_cmd_euler)

    s = sub.add_parser("geo", help="convert between (K^2, chi_O) and (Sign, chi_top)")
    s.add_argument("--ksq", type=_parse_fraction, default=None)
    s.add_argument("--chi-struct", dest="chi_struct", type=_parse_fraction, default=None)
    s.add_argument("--sign", type=_parse_fraction, default=None)
    s.add_argument("--chi-top", dest="chi_top", type=_parse_fraction, default=None)
    s.set_defaults(func=_cmd_geo)

    s = sub.add_parser("twist-value", help="hyperelliptic Meyer value of a Dehn twist")
    s.add_argument("-g", dest="genus", type=int, required=True)
    s.add_argument("--sep", type=int, default=None, metavar="H")
    s.add_argument("--nonsep", action="store_true")
    s.set_defaults(func=_cmd_twist_value)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.selftest:
        return selftest.run(seed=args.seed)
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
