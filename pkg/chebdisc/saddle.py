"""
Closed-form saddle points of the phase function, the turning points a_-/a_+ and
regime classification in the scaled variables a = x/N, b = n/N.
"""
import cmath
import logging
import math
from typing import Optional, Tuple

from chebdisc.base.common import SaddleData, ScaledParams
from chebdisc.base.exceptions import ParameterException
from chebdisc.base.regime import Regime

logger = logging.getLogger(__name__)

DEFAULT_DELTA = 0.02


def check_b(b: float) -> None:
    if not 0.0 < b < 1.0:
        raise ParameterException(f"`b` must lie strictly between 0 and 1, got {b}")


def critical_as(b: float) -> Tuple[float, float]:
    """
    Turning points a_- and a_+ where the w-saddles coalesce.

    :param b: scaled degree n/N in (0, 1)
    :return: tuple (a_minus, a_plus) with a_minus + a_plus = 1
    """
    check_b(b)
    root = math.sqrt(1.0 - b * b)
    a_minus = b * b / (2.0 * (1.0 + root))
    return a_minus, 1.0 - a_minus


def radicand(a: float, b: float) -> float:
    """
    b^2 - 4a + 4a^2, negative exactly between the turning points.
    """
    return b * b - 4.0 * a * (1.0 - a)


def default_delta(N: Optional[int] = None) -> float:
    """
    Default half-width of the transition window around a_minus.
    """
    if N is None:
        return DEFAULT_DELTA
    return 0.5 * N ** (-2.0 / 3.0)


def classify_regime(sp: ScaledParams, delta: float) -> Regime:
    """
    Classify (a, b) into one of the expansion regimes.

    :param sp: scaled parameters
    :param delta: half-width of the transition window around a_minus
    :return: regime tag
    """
    if delta <= 0:
        raise ParameterException(f"Transition half-width must be positive, got {delta}")
    a_minus, _ = critical_as(sp.b)
    if sp.a < 0:
        return Regime.NEGATIVE_A
    if sp.a > 0.5:
        return Regime.REFLECTED
    if abs(sp.a - a_minus) < delta:
        return Regime.TRANSITION
    if sp.a <= a_minus - delta:
        return Regime.MONOTONE
    return Regime.OSCILLATORY


def saddles(sp: ScaledParams) -> SaddleData:
    """
    Saddle points (t_+, w_+) and (t_-, w_-) of the phase function. The square
    root of b^2 - 4a + 4a^2 is principal, so for a_minus < a < a_plus the saddle
    w_plus lies in the upper half plane. The u-saddles are left unset until the
    mapping constant eta is known.

    :param sp: scaled parameters
    :return: saddle data including the regime for the default transition width
    """
    a, b = sp.a, sp.b
    check_b(b)
    if a == 1.0:
        raise ParameterException("Saddle points are undefined at `a`=1")
    a_minus, a_plus = critical_as(b)
    value = radicand(a, b)
    root = cmath.sqrt(complex(value, 0.0))
    if value >= 0:
        w_plus = complex((b + root.real) / (2.0 * b), 0.0)
        # w_+ w_- = a(1-a)/b^2 avoids cancellation for small |a|
        w_minus = complex(a * (1.0 - a) / (b * b * w_plus.real), 0.0)
    else:
        w_plus = (b + root) / (2.0 * b)
        w_minus = (b - root) / (2.0 * b)
    denominator = 2.0 * (1.0 - a) * (1.0 + b)
    t_plus = (2.0 - 2.0 * a - b * b + b * root) / denominator
    t_minus = (2.0 - 2.0 * a - b * b - b * root) / denominator
    regime = classify_regime(sp, default_delta(sp.N))
    return SaddleData(
        t_plus=t_plus,
        t_minus=t_minus,
        w_plus=w_plus,
        w_minus=w_minus,
        a_minus=a_minus,
        a_plus=a_plus,
        regime=regime,
    )


def t0_plus(w: complex, b: float) -> complex:
    """
    The "+" branch of the t-saddle as a function of w. Evaluate off the vertical
    cuts Re w = 1/2 only.
    """
    check_b(b)
    if w == 0:
        raise ParameterException("`t0_plus` has a pole at `w`=0")
    w = complex(w)
    root = cmath.sqrt(1.0 + 4.0 * b * b * (w - 1.0) * w)
    return (2.0 * w - 1.0 + root) / (2.0 * (1.0 + b) * w)


def phase(a: float, b: float, t: complex, w: complex) -> complex:
    """
    Principal-branch phase function

        f(t, w) = b ln(1-t) + (1-b) ln t + a ln w - a ln(w-1) + b ln(1-(1-t)w)
    """
    t, w = complex(t), complex(w)
    value = b * cmath.log(1.0 - t) + (1.0 - b) * cmath.log(t) + \
        b * cmath.log(1.0 - (1.0 - t) * w)
    if a != 0:
        value += a * (cmath.log(w) - cmath.log(w - 1.0))
    return value


def phase_gradient(a: float, b: float, t: complex, w: complex
                   ) -> Tuple[complex, complex]:
    """
    Analytic partial derivatives of `phase` with respect to t and w.
    """
    t, w = complex(t), complex(w)
    inner = 1.0 - (1.0 - t) * w
    d_t = -b / (1.0 - t) + (1.0 - b) / t + b * w / inner
    d_w = -b * (1.0 - t) / inner
    if a != 0:
        d_w += a / w - a / (w - 1.0)
    return d_t, d_w


def kummer_saddles(a: float, eta: float) -> Tuple[complex, complex]:
    """
    Saddle points u_+ and u_- of the canonical Kummer phase
    a ln u - a ln(u-1) + eta u. For eta <= -4a both are real with u_+ <= 1/2.

    :return: tuple (u_plus, u_minus); u_plus + u_minus = 1
    """
    if eta >= 0:
        raise ParameterException(f"`eta` must be negative, got {eta}")
    disc = eta * (eta + 4.0 * a)
    if disc >= 0:
        u_plus = 2.0 * a / (math.sqrt(disc) - eta)
        return complex(u_plus, 0.0), complex(1.0 - u_plus, 0.0)
    root = complex(0.0, math.sqrt(-disc))
    return (eta + root) / (2.0 * eta), (eta - root) / (2.0 * eta)
