"""
Exact evaluation of the discrete Chebyshev polynomials t_n(x, Ncap) in rational
arithmetic. Every asymptotic path in the package is verified against these values.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Tuple, Union

import mpmath

from chebdisc.base.common import ExactValue, PolyParams
from chebdisc.base.exceptions import ParameterException
from chebdisc.base.scaled import ScaledReal
from chebdisc.utils.config import warn_if_over_cap

logger = logging.getLogger(__name__)

Rational = Union[int, str, Fraction]


def make_params(n: int, Ncap: int, x: Rational) -> PolyParams:
    """
    Build validated `PolyParams`.

    :param n: degree.
    :param Ncap: support size.
    :param x: evaluation point; strings such as "7/3" are parsed exactly.
    """
    params = PolyParams(n=n, Ncap=Ncap, x=Fraction(x))
    validate_params(params)
    return params


def validate_params(p: PolyParams) -> None:
    if not isinstance(p.n, int) or not isinstance(p.Ncap, int):
        raise ParameterException(f"Degree and support size must be integers, "
                                 f"got `n`={p.n!r}, `Ncap`={p.Ncap!r}")
    if p.Ncap < 1:
        raise ParameterException(f"`Ncap` must be at least 1, got {p.Ncap}")
    if p.n < 0:
        raise ParameterException(f"Degree must be nonnegative, got {p.n}")
    if p.n >= p.Ncap:
        raise ParameterException(f"Degree `n`={p.n} must be below the support size "
                                 f"`Ncap`={p.Ncap}")
    if not isinstance(p.x, Fraction):
        raise ParameterException(f"`x` must be an exact rational, got {p.x!r}")
    warn_if_over_cap(p.Ncap)


def _rising(start: int, count: int) -> int:
    result = 1
    for j in range(count):
        result *= start + j
    return result


def eval_exact(p: PolyParams) -> ExactValue:
    """
    Evaluate t_n(x, Ncap) from its terminating hypergeometric sum

        (-1)^n (Ncap-n)_n sum_k (-n)_k (-x)_k (n+1)_k / ((1-Ncap)_k k! k!)

    The sum is evaluated in nested (Horner) form with integer numerator and
    denominator, so only a single rational normalization is performed.

    :param p: polynomial parameters
    :return: exact value of t_n(x, Ncap)
    """
    validate_params(p)
    n, Ncap = p.n, p.Ncap
    num_x, den_x = p.x.numerator, p.x.denominator
    num, den = 1, 1
    for k in reversed(range(n)):
        ratio_num = (k - n) * (k * den_x - num_x) * (n + 1 + k)
        ratio_den = (k + 1 - Ncap) * (k + 1) ** 2 * den_x
        num, den = den * ratio_den + ratio_num * num, den * ratio_den
    value = Fraction(num, den) * _rising(Ncap - n, n)
    return -value if n % 2 else value


def _binomial(y: Fraction, k: int) -> Fraction:
    """
    Binomial coefficient as the degree-k polynomial y(y-1)...(y-k+1)/k! in y.
    """
    result = Fraction(1)
    for j in range(k):
        result = result * (y - j) / (j + 1)
    return result


def eval_difference(p: PolyParams) -> ExactValue:
    """
    Evaluate t_n(x, Ncap) = n! Delta^n [C(x, n) C(x - Ncap, n)] through the
    alternating binomial sum of forward differences.

    :param p: polynomial parameters
    :return: exact value of t_n(x, Ncap)
    """
    validate_params(p)
    n, Ncap, x = p.n, p.Ncap, p.x
    total = Fraction(0)
    coefficient = 1
    for j in range(n + 1):
        y = x + j
        term = coefficient * _binomial(y, n) * _binomial(y - Ncap, n)
        total += term if (n - j) % 2 == 0 else -term
        coefficient = coefficient * (n - j) // (j + 1)
    return total * _rising(1, n)


def orthogonality_norm(n: int, Ncap: int) -> int:
    """
    Squared norm Ncap (Ncap^2 - 1^2) ... (Ncap^2 - n^2) / (2n + 1) of t_n on the
    lattice 0, ..., Ncap - 1.
    """
    validate_params(PolyParams(n, Ncap, Fraction(0)))
    product = Ncap
    for j in range(1, n + 1):
        product *= Ncap * Ncap - j * j
    norm, remainder = divmod(product, 2 * n + 1)
    assert remainder == 0
    return norm


@lru_cache(maxsize=256)
def _lattice_values(n: int, Ncap: int) -> Tuple[Fraction, ...]:
    return tuple(eval_exact(PolyParams(n, Ncap, Fraction(x))) for x in range(Ncap))


def orthogonality_residual(n: int, m: int, Ncap: int) -> ExactValue:
    """
    Lattice sum of t_n t_m minus its expected value (0 for n != m, the squared
    norm otherwise). Exactly zero for valid arguments.
    """
    for degree in (n, m):
        validate_params(PolyParams(degree, Ncap, Fraction(0)))
    total = sum((u * v for u, v in zip(_lattice_values(n, Ncap),
                                       _lattice_values(m, Ncap))), Fraction(0))
    if n == m:
        total -= orthogonality_norm(n, Ncap)
    return total


def symmetry_residual(p: PolyParams) -> ExactValue:
    """
    t_n(x, Ncap) - (-1)^n t_n(Ncap - 1 - x, Ncap); exactly zero.
    """
    mirrored = eval_exact(p._replace(x=(p.Ncap - 1) - p.x))
    if p.n % 2:
        mirrored = -mirrored
    return eval_exact(p) - mirrored


def eval_scaled(p: PolyParams) -> ScaledReal:
    """
    Exact value converted to a `ScaledReal` with a correctly rounded mantissa.
    """
    return ScaledReal.from_fraction(eval_exact(p))


def eval_log10_abs(p: PolyParams, dps: int = 40) -> Tuple[int, mpmath.mpf]:
    """
    Sign and decimal log-magnitude of t_n(x, Ncap) to `dps` significant digits.

    :return: tuple of sign and log10|t_n|; (0, -inf) for an exact zero
    """
    value = eval_exact(p)
    if value == 0:
        return 0, mpmath.mpf("-inf")
    with mpmath.workdps(dps):
        magnitude = mpmath.mpf(abs(value.numerator)) / mpmath.mpf(value.denominator)
        log_value = mpmath.log10(magnitude)
    return (1 if value > 0 else -1), log_value
