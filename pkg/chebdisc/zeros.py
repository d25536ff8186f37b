"""
Zeros of t_n(x, N+1): certified isolation with exact rational signs, and the
asymptotic locations of the zeros near the ends of the lattice.
"""
import logging
import math
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from chebdisc.base.common import PolyParams, ZeroEstimate
from chebdisc.base.exceptions import (ParameterException, RegimeRefusalException,
                                      SolverException)
from chebdisc.base.regime import ZeroKind
from chebdisc.exact import eval_exact
from chebdisc.mapping import solve_eta_gamma
from chebdisc.saddle import critical_as

logger = logging.getLogger(__name__)

MAX_REFINEMENTS = 16

# an isolated zero is either an exact probe or a sign-change bracket
Isolated = Union[Fraction, Tuple[Fraction, Fraction, int]]


def _sign(n: int, Ncap: int, x: Fraction) -> int:
    value = eval_exact(PolyParams(n, Ncap, x))
    return (value > 0) - (value < 0)


def _scan(points: List[Fraction], signs: Dict[Fraction, int]) -> List[Isolated]:
    isolated: List[Isolated] = []
    last: Optional[Tuple[Fraction, int]] = None
    crossed = False
    for point in points:
        sign = signs[point]
        if sign == 0:
            isolated.append(point)
            crossed = True
            continue
        if last is not None and sign != last[1] and not crossed:
            isolated.append((last[0], point, last[1]))
        last = (point, sign)
        crossed = False
    return isolated


def _isolate(n: int, N: int) -> List[Isolated]:
    Ncap = N + 1
    step = Fraction(1)
    points = [Fraction(k) for k in range(N + 1)]
    signs = {point: _sign(n, Ncap, point) for point in points}
    for refinement in range(MAX_REFINEMENTS):
        isolated = _scan(points, signs)
        if len(isolated) == n:
            logger.debug(f"Isolated {n} zeros with probe step {step}")
            return isolated
        step /= 2
        midpoints = [point + step for point in points[:-1]]
        signs.update({point: _sign(n, Ncap, point) for point in midpoints})
        points = sorted(points + midpoints)
    raise SolverException(f"Found only {len(_scan(points, signs))} of {n} zeros of "
                          f"degree {n} after {MAX_REFINEMENTS} probe refinements")


def _refine(n: int, Ncap: int, item: Isolated, tolerance: Fraction) -> Fraction:
    if isinstance(item, Fraction):
        return item
    lo, hi, sign_lo = item
    while hi - lo > tolerance:
        mid = (lo + hi) / 2
        sign = _sign(n, Ncap, mid)
        if sign == 0:
            return mid
        if sign == sign_lo:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def zeros_exact(n: int, N: int, digits: int = 10, count: Optional[int] = None
                ) -> List[float]:
    """
    Zeros of t_n(x, N+1) in ascending order. Probes at the integers, then
    half-integers and finer dyadic grids until n zeros are isolated, each by an
    exact zero probe or a pair of probes with opposite exact signs; brackets are
    then bisected in exact arithmetic to width 10^-digits.

    :param n: degree, 1 <= n <= N
    :param N: scale; the support size is N + 1
    :param digits: number of decimal digits of the bisection width
    :param count: if set, only the first `count` zeros are refined and returned
    :return: list of zeros
    """
    if not 1 <= n <= N:
        raise ParameterException(f"`zeros_exact` requires 1 <= n <= N, got `n`={n}, "
                                 f"`N`={N}")
    if digits < 1:
        raise ParameterException(f"`digits` must be positive, got {digits}")
    isolated = _isolate(n, N)
    if count is not None:
        isolated = isolated[:count]
    tolerance = Fraction(1, 10 ** digits)
    return [float(_refine(n, N + 1, item, tolerance)) for item in isolated]


def zero_error_exponent(a: float, b: float, eta: float) -> float:
    """
    Exponent of the error of the small-zero approximation,

        2a ln((1 + s) / (1 - s)) + eta s,  s = sqrt(1 + 4a/eta)

    negative below the turning point and tending to 0 as a -> a_minus.
    """
    a_minus, _ = critical_as(b)
    if not 0 <= a < a_minus:
        raise RegimeRefusalException(f"`zero_error_exponent` requires "
                                     f"0 <= a < {a_minus}, got {a}")
    if eta >= 0 or eta > -4.0 * a:
        raise ParameterException(f"`eta`={eta} outside domain eta <= -4a < 0")
    if a == 0:
        return eta
    ratio = 4.0 * a / eta
    s = math.sqrt(1.0 + ratio)
    one_minus_s = -ratio / (1.0 + s)
    return 2.0 * a * math.log((1.0 + s) / one_minus_s) + eta * s


def zero_estimates(n: int, N: int) -> List[ZeroEstimate]:
    """
    Asymptotic zero locations. Zeros with s - 1 < a_minus N sit at s - 1 and the
    mirrored zeros with s > n - a_minus N at N - n + s; the others are marked
    uncovered. The exponent is N times `zero_error_exponent` at a = (s-1)/N.

    :param n: degree, 0 < n < N
    :param N: scale; the support size is N + 1
    :return: one estimate per zero index s = 1..n
    """
    if not 0 < n < N:
        raise ParameterException(f"`zero_estimates` requires 0 < n < N, got "
                                 f"`n`={n}, `N`={N}")
    b = n / N
    a_minus, _ = critical_as(b)
    limit = a_minus * N
    exponents: Dict[int, float] = {}

    def exponent_at(offset: int) -> float:
        if offset not in exponents:
            a = offset / N
            eta = solve_eta_gamma(a, b).eta
            exponents[offset] = N * zero_error_exponent(a, b, eta)
        return exponents[offset]

    estimates = []
    for s in range(1, n + 1):
        if s - 1 < limit:
            estimates.append(ZeroEstimate(s, float(s - 1), exponent_at(s - 1),
                                          ZeroKind.SMALL))
        elif s > n - limit:
            estimates.append(ZeroEstimate(s, float(N - n + s), exponent_at(n - s),
                                          ZeroKind.LARGE))
        else:
            estimates.append(ZeroEstimate(s, None, None, ZeroKind.UNCOVERED))
    return estimates
