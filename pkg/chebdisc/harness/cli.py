"""
Command line front end: `chebdisc eval | mapping | zeros | verify`.
"""
import argparse
import csv
import logging
import sys
from fractions import Fraction
from typing import List, Optional, TextIO

from chebdisc.base.common import SweepSpec
from chebdisc.base.engine import EngineContext
from chebdisc.base.exceptions import ChebDiscException, RegimeRefusalException
from chebdisc.base.regime import OutputFormat, Regime, ZeroKind
from chebdisc.base.table import ResultTableContext
from chebdisc.exact import eval_exact, eval_scaled, make_params
from chebdisc.expansion import asymptotic_fixed_x, asymptotic_value
from chebdisc.harness.sweep import error_ratios, VerifySweep
from chebdisc.harness.writers import format_float
from chebdisc.mapping import gamma_negative_a, solve_eta_gamma
from chebdisc.zeros import zero_estimates, zeros_exact

logger = logging.getLogger(__name__)

DEFAULT_TABLE = "chebdisc_errors"
DEFAULT_SWEEP_ID = "default"


def rational(value: str) -> Fraction:
    """
    Parse a decimal or `p/q` string exactly.
    """
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {value!r}")


def _print(out: TextIO, key: str, value: object) -> None:
    out.write(f"{key}: {value}\n")


def cmd_eval(args: argparse.Namespace, out: TextIO) -> None:
    params = make_params(args.n, args.N + 1, args.x)
    exact = None
    if args.mode in ("exact", "both"):
        exact = eval_scaled(params)
        _print(out, "exact", eval_exact(params))
        _print(out, "exact_scaled", exact)
    if args.mode == "exact":
        return
    if args.fixed_x:
        result = asymptotic_fixed_x(args.n, args.N, args.x)
    else:
        result = asymptotic_value(args.n, args.N, args.x, args.delta)
    _print(out, "regime", result.regime.value)
    _print(out, "prefactor", result.prefactor)
    _print(out, "c0", format_float(result.c0))
    _print(out, "d0", format_float(result.d0))
    _print(out, "M", result.M)
    _print(out, "Mprime", result.Mprime)
    mapping = result.mapping
    eta = mapping.eta if mapping is not None else None
    _print(out, "eta", "n/a" if eta is None else format_float(eta))
    _print(out, "gamma", "n/a" if mapping is None else format_float(mapping.gamma))
    _print(out, "asym", result.value)
    _print(out, "envelope", result.envelope)
    if exact is not None:
        rel_err, env_err = error_ratios(exact, result)
        _print(out, "rel_err", "n/a" if rel_err is None else format_float(rel_err))
        _print(out, "env_err", "n/a" if env_err is None else format_float(env_err))


def cmd_mapping(args: argparse.Namespace, out: TextIO) -> None:
    a, b = float(args.a), float(args.b)
    if a > 0.5:
        raise RegimeRefusalException(
            f"`a`={a} exceeds 1/2; evaluate at the reflected point a={1.0 - a} and "
            f"multiply by (-1)^n")
    if a < 0:
        constants = gamma_negative_a(a, b)
    else:
        constants = solve_eta_gamma(a, b)
    _print(out, "regime", constants.regime.value)
    _print(out, "eta",
           "n/a" if constants.eta is None else format_float(constants.eta))
    _print(out, "gamma", format_float(constants.gamma))
    _print(out, "residual", format_float(constants.residual))
    if constants.bracket is None:
        _print(out, "bracket", "n/a")
    else:
        lo, hi = constants.bracket
        _print(out, "bracket", f"[{format_float(lo)}, {format_float(hi)}]")


def cmd_zeros(args: argparse.Namespace, out: TextIO) -> None:
    zeros = zeros_exact(args.n, args.N, digits=args.digits, count=args.count)
    writer = csv.writer(out, lineterminator="\n")
    if not args.compare:
        writer.writerow(("s", "zero"))
        for s, zero in enumerate(zeros, start=1):
            writer.writerow((s, repr(zero)))
        return
    writer.writerow(("s", "zero", "kind", "estimate", "deviation",
                     "error_exponent", "radius"))
    for zero, estimate in zip(zeros, zero_estimates(args.n, args.N)):
        if estimate.kind is ZeroKind.UNCOVERED:
            writer.writerow((estimate.s, repr(zero), estimate.kind.value,
                             "", "", "", ""))
            continue
        writer.writerow((
            estimate.s,
            repr(zero),
            estimate.kind.value,
            repr(estimate.location),
            format_float(abs(zero - estimate.location)),
            format_float(estimate.error_exponent),
            format_float(estimate.radius),
        ))


def cmd_verify(args: argparse.Namespace, out: TextIO) -> None:
    regimes = None
    if args.regimes:
        regimes = frozenset(Regime(value) for value in args.regimes)
    spec = SweepSpec(
        b_values=args.b,
        a_values=args.a,
        N_values=args.N,
        regimes=regimes,
        integer_x_only=not args.all_x,
        output_path=args.out,
        format=OutputFormat(args.format),
        delta=args.delta,
        jobs=args.jobs,
    )
    table_context = None
    if args.db is not None:
        engine_context = EngineContext("results", args.db)
        table_context = ResultTableContext(
            name=args.table,
            engine_context=engine_context,
            comment="Exact against asymptotic values of discrete Chebyshev "
                    "polynomials",
            batch_params={"sweep_id": args.sweep_id},
        )
    sweep = VerifySweep(spec, table_context)
    sweep.execute(out)
    if spec.format is OutputFormat.CSV:
        # slopes are part of the JSON document but not of the CSV table
        stream = sys.stderr if spec.output_path is None else out
        for slope in sweep.slopes:
            stream.write(f"slope a={slope.a} b={slope.b} "
                         f"points={slope.points} slope={format_float(slope.slope)}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebdisc",
        description="Exact values, uniform asymptotics and zeros of discrete "
                    "Chebyshev polynomials t_n(x, N+1).",
    )
    parser.add_argument("--verbose", action="store_true",
                        help="Log debug messages of the chebdisc package.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    eval_parser = subparsers.add_parser("eval", help="Evaluate t_n(x, N+1).")
    eval_parser.add_argument("--n", type=int, required=True, help="Degree.")
    eval_parser.add_argument("--N", type=int, required=True,
                             help="Scale; the support size is N + 1.")
    eval_parser.add_argument("--x", type=rational, required=True,
                             help="Evaluation point, e.g. 7 or 1/2.")
    eval_parser.add_argument("--mode", choices=("exact", "asym", "both"),
                             default="both")
    eval_parser.add_argument("--delta", type=float, default=None,
                             help="Half-width of the refused transition window.")
    eval_parser.add_argument("--fixed-x", action="store_true", dest="fixed_x",
                             help="Use the simplified forms for fixed x.")
    eval_parser.set_defaults(func=cmd_eval)

    mapping_parser = subparsers.add_parser(
        "mapping", help="Solve the mapping constants eta and gamma.")
    mapping_parser.add_argument("--a", type=rational, required=True,
                                help="Scaled point x/N, at most 1/2.")
    mapping_parser.add_argument("--b", type=rational, required=True,
                                help="Scaled degree n/N in (0, 1).")
    mapping_parser.set_defaults(func=cmd_mapping)

    zeros_parser = subparsers.add_parser("zeros", help="Zeros of t_n(x, N+1).")
    zeros_parser.add_argument("--n", type=int, required=True, help="Degree.")
    zeros_parser.add_argument("--N", type=int, required=True,
                              help="Scale; the support size is N + 1.")
    zeros_parser.add_argument("--digits", type=int, default=10,
                              help="Decimal digits of the bisection width.")
    zeros_parser.add_argument("--count", type=int, default=None,
                              help="Only refine the first COUNT zeros.")
    zeros_parser.add_argument("--compare", action="store_true",
                              help="Compare with the asymptotic zero locations.")
    zeros_parser.set_defaults(func=cmd_zeros)

    verify_parser = subparsers.add_parser(
        "verify", help="Sweep exact against asymptotic values.")
    verify_parser.add_argument("--a", type=rational, nargs="+", required=True)
    verify_parser.add_argument("--b", type=rational, nargs="+", required=True)
    verify_parser.add_argument("--N", type=int, nargs="+", required=True)
    verify_parser.add_argument("--regimes", nargs="+", default=None,
                               choices=[regime.value for regime in Regime])
    verify_parser.add_argument("--all-x", action="store_true", dest="all_x",
                               help="Also evaluate non-integer points x = aN.")
    verify_parser.add_argument("--format", default=OutputFormat.CSV.value,
                               choices=[fmt.value for fmt in OutputFormat])
    verify_parser.add_argument("--out", default=None, help="Output file path.")
    verify_parser.add_argument("--jobs", type=int, default=1,
                               help="Number of worker processes.")
    verify_parser.add_argument("--delta", type=float, default=None,
                               help="Half-width of the refused transition window.")
    verify_parser.add_argument("--db", default=None,
                               help="SQLAlchemy url of a database to write rows to.")
    verify_parser.add_argument("--table", default=DEFAULT_TABLE)
    verify_parser.add_argument("--sweep-id", default=DEFAULT_SWEEP_ID,
                               dest="sweep_id")
    verify_parser.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    package_logger = logging.getLogger("chebdisc")
    package_logger.setLevel(logging.DEBUG if args.verbose else logging.WARNING)
    if not logging.getLogger().handlers and not package_logger.handlers:
        logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    try:
        args.func(args, out)
    except ChebDiscException as e:
        sys.stderr.write(f"error: {e}\n")
        return e.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
