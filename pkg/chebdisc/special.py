"""
Scalar special functions: log-Gamma, the confluent hypergeometric (Kummer)
function M(x+1, 1, z) for integer x, and leading-order asymptotic forms of M.
"""
import logging
import math
from typing import Union

import mpmath

from chebdisc.base.common import KummerValue
from chebdisc.base.exceptions import (ParameterException, RegimeRefusalException,
                                      SolverException)
from chebdisc.base.scaled import ScaledReal
from chebdisc.saddle import check_b, critical_as, kummer_saddles

logger = logging.getLogger(__name__)

# Lanczos approximation, g = 7, n = 9
LANCZOS_G = 7
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
LOG_SQRT_TWO_PI = 0.5 * math.log(2.0 * math.pi)

MAX_KUMMER_DEGREE = 10 ** 4
MAX_SERIES_ARGUMENT = 2000.0
MAX_SERIES_TERMS = 100000
SERIES_EPSILON = 1e-17


def log_gamma(y: float) -> float:
    """
    Natural logarithm of the Gamma function for positive arguments.

    :param y: argument, y > 0
    :return: ln Gamma(y)
    """
    if not y > 0:
        raise ParameterException(f"`log_gamma` requires a positive argument, got {y}")
    if y < 0.5:
        # reflection; sin(pi y) > 0 on (0, 1/2)
        return math.log(math.pi / math.sin(math.pi * y)) - log_gamma(1.0 - y)
    z = y - 1.0
    series = LANCZOS_COEFFICIENTS[0]
    for i, coefficient in enumerate(LANCZOS_COEFFICIENTS[1:], start=1):
        series += coefficient / (z + i)
    t = z + LANCZOS_G + 0.5
    return LOG_SQRT_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(series)


def kummer_series(d: float, c: float, z: float) -> float:
    """
    Power series sum_k (d)_k z^k / ((c)_k k!) of M(d, c, z), summed in mpmath with
    a working precision that grows with |z| to absorb the cancellation of
    alternating terms.

    :param d: first parameter
    :param c: second parameter, not a nonpositive integer
    :param z: argument, |z| <= 2000
    :return: M(d, c, z) as a double
    """
    if c <= 0 and c == int(c):
        raise ParameterException(f"`c` must not be a nonpositive integer, got {c}")
    if abs(z) > MAX_SERIES_ARGUMENT:
        raise ParameterException(f"`kummer_series` requires |z| <= "
                                 f"{MAX_SERIES_ARGUMENT}, got {z}")
    dps = 40 + int(abs(z) / math.log(10.0))
    with mpmath.workdps(dps):
        d_mp, c_mp, z_mp = mpmath.mpf(d), mpmath.mpf(c), mpmath.mpf(z)
        term = mpmath.mpf(1)
        total = mpmath.mpf(1)
        settled = 2.0 * abs(z) + abs(d)
        for k in range(MAX_SERIES_TERMS):
            term = term * (d_mp + k) * z_mp / ((c_mp + k) * (k + 1))
            total += term
            if term == 0:
                break
            if k > settled and abs(term) <= SERIES_EPSILON * abs(total):
                break
        else:
            raise SolverException(f"Kummer series for `d`={d}, `c`={c}, `z`={z} did "
                                  f"not converge in {MAX_SERIES_TERMS} terms")
        return float(total)


def kummer_M(x: int, z: float) -> KummerValue:
    """
    M(x+1, 1, z) and its z-derivative for integer x >= 0 from the terminating
    reflection

        M(x+1, 1, z) = e^z L_x(-z),   M'(x+1, 1, z) = e^z sum_{k<=x} L_k(-z)

    where L_k are Laguerre polynomials evaluated by their three-term recurrence
    in `ScaledReal` arithmetic.

    :param x: nonnegative integer, x <= 10^4
    :param z: real argument
    :return: values of M and M'
    """
    if int(x) != x or x < 0:
        raise ParameterException(f"`kummer_M` requires a nonnegative integer `x`, "
                                 f"got {x}")
    x = int(x)
    if x > MAX_KUMMER_DEGREE:
        raise ParameterException(f"`x`={x} exceeds {MAX_KUMMER_DEGREE}")
    y = -z
    previous = ScaledReal.one()
    partial_sum = ScaledReal.one()
    current = previous
    if x > 0:
        current = ScaledReal.from_float(1.0 - y)
        partial_sum = partial_sum + current
    for k in range(1, x):
        current, previous = \
            (current * (2 * k + 1 - y) - previous * k) / (k + 1), current
        partial_sum = partial_sum + current
    scale = ScaledReal.exp(z)
    return KummerValue(M=scale * current, Mprime=scale * partial_sum)


def _kummer_hat_phase(a: float, eta: float, u: float) -> float:
    return a * math.log(u) - a * math.log(1.0 - u) + eta * u


def kummer_asym_monotone(a: float, b: float, eta: float, N: int) -> ScaledReal:
    """
    Leading saddle-point approximation of M(aN+1, 1, eta N) below the turning
    point, dominated by the saddle u_+:

        e^{N psi(u_+)} / sqrt(pi N) * sin(a pi N) / (u_+ - 1) * sqrt(2 / -psi''(u_+))
    """
    check_b(b)
    a_minus, _ = critical_as(b)
    if not 0 < a < a_minus or eta > -4.0 * a:
        raise RegimeRefusalException(f"`kummer_asym_monotone` requires "
                                     f"0 < a < {a_minus} and eta <= -4a, got "
                                     f"`a`={a}, `eta`={eta}")
    u_plus = kummer_saddles(a, eta)[0].real
    second = a * (2.0 * u_plus - 1.0) / (u_plus * u_plus * (u_plus - 1.0) ** 2)
    factor = math.sin(a * math.pi * N) / (u_plus - 1.0) * \
        math.sqrt(2.0 / -second) / math.sqrt(math.pi * N)
    return ScaledReal.exp(N * _kummer_hat_phase(a, eta, u_plus)) * factor


def kummer_asym_fixed_x(x: Union[int, float], eta: float, N: int) -> ScaledReal:
    """
    Leading term of M(x+1, 1, eta N) for fixed x as N grows:

        -sin(pi x) Gamma(x+1) / (pi [-(x + eta N)]^{x+1})

    The term vanishes identically for integer x, leaving only the exponentially
    small O(e^{eta N}) part, which is not represented.
    """
    if x < 0:
        raise ParameterException(f"`x` must be nonnegative, got {x}")
    base = -(x + eta * N)
    if base <= 0:
        raise ParameterException(f"-(x + eta N) must be positive, got {base}")
    if x == int(x):
        return ScaledReal.zero()
    sine = math.sin(math.pi * (x % 2.0))
    ln_magnitude = math.log(abs(sine)) + log_gamma(x + 1.0) - math.log(math.pi) - \
        (x + 1.0) * math.log(base)
    return ScaledReal.from_log(ln_magnitude, -1 if sine > 0 else 1)
