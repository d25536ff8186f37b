"""
Mapping constants eta and gamma that match the phase function at its saddles to
the canonical Kummer phase (0 <= a <= 1/2) or the Hankel-loop Gamma phase (a < 0).
Both eta equations are monotone in eta, so they are solved by bracketed bisection.
"""
import cmath
import logging
import math
from typing import Callable, Tuple

from chebdisc.base.common import MappingConstants, ScaledParams
from chebdisc.base.exceptions import (ParameterException, RegimeRefusalException,
                                      SolverException)
from chebdisc.base.regime import Regime
from chebdisc.saddle import (check_b, critical_as, kummer_saddles, phase, radicand,
                             saddles)

logger = logging.getLogger(__name__)

ETA_TOLERANCE = 1e-13
PHASE_TOLERANCE = 1e-9
MAX_BISECTIONS = 400
MAX_BRACKET_WIDTH = 1e8


def _log_abs(value: complex) -> float:
    magnitude = abs(value)
    if magnitude == 0.0:
        raise ParameterException("Logarithm of zero in phase evaluation")
    return math.log(magnitude)


def real_phase(a: float, b: float, t: complex, w: complex) -> float:
    """
    Real part of the phase function, with real-branch logarithms of the moduli.

    :param t: t-saddle
    :param w: w-saddle
    """
    value = b * _log_abs(1.0 - t) + (1.0 - b) * _log_abs(t) + \
        b * _log_abs(1.0 - (1.0 - t) * w)
    if a != 0:
        value += a * (_log_abs(w) - _log_abs(w - 1.0))
    return value


def kummer_phase(a: float, eta: float, u: complex) -> complex:
    """
    Principal-branch canonical Kummer phase a ln u - a ln(u-1) + eta u.
    """
    u = complex(u)
    value = eta * u
    if a != 0:
        value += a * (cmath.log(u) - cmath.log(u - 1.0))
    return value


def kummer_real_phase(a: float, eta: float, u: complex) -> float:
    value = eta * complex(u).real
    if a != 0:
        value += a * (_log_abs(u) - _log_abs(u - 1.0))
    return value


def k_of_eta(a: float, eta: float) -> float:
    """
    Monotone left-hand side of the eta equation below the turning point:

        k(eta) = 2a ln((eta - sqrt(D)) / (eta + sqrt(D))) - sqrt(D),  D = eta^2 + 4a eta

    evaluated in the cancellation-free form 2a [2 ln(sqrt(D) - eta) - ln(-4a eta)].

    :param a: scaled point, a >= 0
    :param eta: eta <= -4a
    :return: k(eta) in (-inf, 0]
    """
    if a < 0:
        raise ParameterException(f"`k_of_eta` requires `a` >= 0, got {a}")
    if eta > -4.0 * a:
        raise ParameterException(f"`eta`={eta} outside domain eta <= -4a={-4.0 * a}")
    disc = max(eta * (eta + 4.0 * a), 0.0)
    root = math.sqrt(disc)
    if a == 0 or root == 0:
        return -root
    return 2.0 * a * (2.0 * math.log(root - eta) - math.log(-4.0 * a * eta)) - root


def neg_i_g_of_eta(a: float, eta: float) -> float:
    """
    -i g(eta) = 2a (2 arctan(S / -eta) - pi) - S with S = sqrt(-eta^2 - 4a eta),
    increasing from -2 pi a at eta = -4a to 0 at eta = 0. The endpoints return
    their limits.
    """
    if a <= 0:
        raise ParameterException(f"`neg_i_g_of_eta` requires `a` > 0, got {a}")
    if eta < -4.0 * a or eta > 0:
        raise ParameterException(f"`eta`={eta} outside domain [-4a, 0]")
    if eta == 0:
        return 0.0
    root = math.sqrt(max(-eta * (eta + 4.0 * a), 0.0))
    return 2.0 * a * (2.0 * math.atan(root / -eta) - math.pi) - root


def q_of_a(a: float, b: float) -> float:
    """
    Closed form of twice the imaginary part of the phase at the upper saddle,
    defined for a_minus <= a <= 1/2 and bounded by -2 pi a < q(a) < 0.
    """
    check_b(b)
    if a > 0.5:
        raise ParameterException(f"`q_of_a` requires `a` <= 1/2, got {a}")
    value = 4.0 * a - 4.0 * a * a - b * b
    if value < 0:
        if value < -1e-14:
            raise ParameterException(
                f"`q_of_a` requires `a` >= a_minus; radicand {value} is negative")
        value = 0.0
    root = math.sqrt(value)
    return 2.0 * (
        2.0 * b * math.atan(-root / (2.0 - 2.0 * a + b))
        + (1.0 - b) * math.atan(b * root / (2.0 - 2.0 * a - b * b))
        + 2.0 * a * math.atan(root / b)
        - a * math.pi
    )


def r_of_a(a: float, b: float) -> float:
    """
    Difference of the real phase between the upper and lower saddle; nonpositive
    for 0 <= a <= a_minus. A positive difference beyond rounding means the saddles
    are mislabelled and raises.
    """
    data = saddles(ScaledParams(a, b))
    difference = real_phase(a, b, data.t_plus, data.w_plus) - \
        real_phase(a, b, data.t_minus, data.w_minus)
    if difference > PHASE_TOLERANCE:
        raise SolverException(f"Real phase at the upper saddle exceeds the lower one "
                              f"by {difference} for `a`={a}, `b`={b}")
    return min(difference, 0.0)


def _bisect(func: Callable[[float], float], lo: float, hi: float,
            tolerance: float = ETA_TOLERANCE) -> float:
    """
    Bisection for the root of an increasing function on [lo, hi].
    """
    f_lo, f_hi = func(lo), func(hi)
    if f_lo > 0 or f_hi < 0:
        raise SolverException(f"No sign change on bracket [{lo}, {hi}]: "
                              f"f(lo)={f_lo}, f(hi)={f_hi}")
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    for _ in range(MAX_BISECTIONS):
        if hi - lo <= tolerance:
            return 0.5 * (lo + hi)
        mid = 0.5 * (lo + hi)
        f_mid = func(mid)
        if f_mid == 0:
            return mid
        if f_mid < 0:
            lo = mid
        else:
            hi = mid
    raise SolverException(f"Bisection did not converge on [{lo}, {hi}]")


def _solve_monotone(a: float, b: float) -> Tuple[float, float, Tuple[float, float]]:
    target = r_of_a(a, b)
    hi = -4.0 * a
    width = 1.0
    while k_of_eta(a, hi - width) >= target:
        width *= 2.0
        if width > MAX_BRACKET_WIDTH:
            raise SolverException(f"Unable to bracket `eta` for `a`={a}, `b`={b}, "
                                  f"`r`={target}")
    bracket = (hi - width, hi)
    eta = _bisect(lambda value: k_of_eta(a, value) - target, *bracket)
    return eta, abs(k_of_eta(a, eta) - target), bracket


def _solve_oscillatory(a: float, b: float
                       ) -> Tuple[float, float, Tuple[float, float]]:
    target = q_of_a(a, b)
    lower = -2.0 * math.pi * a
    if target > PHASE_TOLERANCE or target < lower - PHASE_TOLERANCE:
        raise SolverException(f"q(a)={target} outside [{lower}, 0] for `a`={a}, "
                              f"`b`={b}")
    target = min(max(target, lower), 0.0)
    bracket = (-4.0 * a, 0.0)
    eta = _bisect(lambda value: neg_i_g_of_eta(a, value) - target, *bracket)
    return eta, abs(neg_i_g_of_eta(a, eta) - target), bracket


def solve_eta_gamma(a: float, b: float) -> MappingConstants:
    """
    Solve the mapping constants for 0 <= a <= 1/2. Below the turning point eta
    solves k(eta) = r(a) on (-inf, -4a]; above it eta solves -i g(eta) = q(a) on
    (-4a, 0). In both cases gamma follows from the real part of the equation that
    pairs (t_-, w_-) with u_+.

    :param a: scaled point x/N
    :param b: scaled degree n/N
    :return: solved mapping constants with solver diagnostics
    """
    check_b(b)
    if a < 0:
        raise ParameterException(f"`solve_eta_gamma` requires `a` >= 0, got {a}; "
                                 f"use `gamma_negative_a`")
    if a > 0.5:
        raise RegimeRefusalException(f"`a`={a} exceeds 1/2; reflect x -> N - x first")
    if radicand(a, b) >= 0:
        regime = Regime.MONOTONE
        eta, residual, bracket = _solve_monotone(a, b)
    else:
        regime = Regime.OSCILLATORY
        eta, residual, bracket = _solve_oscillatory(a, b)
    data = saddles(ScaledParams(a, b))
    u_plus, _ = kummer_saddles(a, eta)
    gamma = real_phase(a, b, data.t_minus, data.w_minus) - \
        kummer_real_phase(a, eta, u_plus)
    logger.debug(f"Solved `eta`={eta} `gamma`={gamma} for `a`={a} `b`={b} "
                 f"({regime.value}, residual {residual})")
    return MappingConstants(
        eta=eta,
        gamma=gamma,
        residual=residual,
        bracket=bracket,
        regime=regime,
    )


def gamma_hankel(a: float, b: float) -> float:
    """
    gamma of the Hankel-loop mapping that sends w_- to u = a:

        gamma = Re f(t_-, w_-) - a ln|a| + a

    Valid for any a < a_minus except a = 0.
    """
    check_b(b)
    if a == 0:
        raise ParameterException("`gamma_hankel` is undefined at `a`=0")
    a_minus, _ = critical_as(b)
    if a >= a_minus:
        raise RegimeRefusalException(f"`gamma_hankel` requires `a` < a_minus={a_minus}, "
                                     f"got {a}")
    data = saddles(ScaledParams(a, b))
    return real_phase(a, b, data.t_minus, data.w_minus) - a * math.log(abs(a)) + a


def gamma_negative_a(a: float, b: float) -> MappingConstants:
    """
    Mapping constant for a < 0. The residual is the defect of the mapping
    equation Re f(t_-, w_-) = a ln|u| - u + gamma re-substituted at u = a.
    """
    if a >= 0:
        raise ParameterException(f"`gamma_negative_a` requires `a` < 0, got {a}")
    gamma = gamma_hankel(a, b)
    data = saddles(ScaledParams(a, b))
    residual = abs(real_phase(a, b, data.t_minus, data.w_minus)
                   - (a * math.log(-a) - a + gamma))
    return MappingConstants(
        eta=None,
        gamma=gamma,
        residual=residual,
        bracket=None,
        regime=Regime.NEGATIVE_A,
    )


def system_residual(a: float, b: float, constants: MappingConstants) -> float:
    """
    Largest defect of the defining system for 0 <= a <= 1/2: the real parts of
    both saddle correspondences and, above the turning point, the imaginary part
    of the upper saddles against q(a), once through the closed form -i g(eta) and
    once through the principal-branch Kummer phase at u_- (the upper u-saddle).
    """
    if constants.eta is None:
        raise ParameterException("Mapping constants carry no `eta`")
    eta, gamma = constants.eta, constants.gamma
    data = saddles(ScaledParams(a, b))
    u_plus, u_minus = kummer_saddles(a, eta)
    defects = [
        real_phase(a, b, data.t_plus, data.w_plus) -
        kummer_real_phase(a, eta, u_minus) - gamma,
        real_phase(a, b, data.t_minus, data.w_minus) -
        kummer_real_phase(a, eta, u_plus) - gamma,
    ]
    if radicand(a, b) < 0:
        defects.append(2.0 * phase(a, b, data.t_plus, data.w_plus).imag - q_of_a(a, b))
        defects.append(neg_i_g_of_eta(a, eta) - q_of_a(a, b))
        defects.append(2.0 * kummer_phase(a, eta, u_minus).imag - q_of_a(a, b))
    else:
        defects.append(k_of_eta(a, eta) - r_of_a(a, b))
    return max(abs(defect) for defect in defects)


def eta_limit(b: float) -> Tuple[float, float]:
    """
    Linear behaviour eta(a) = eta0 + eta1 a as a -> 0+.

    :return: tuple (eta0, eta1)
    """
    check_b(b)
    eta0 = -((1.0 - b) * math.log(1.0 - b) + (1.0 + b) * math.log(1.0 + b))
    return eta0, -2.0 * math.log(-eta0 / (b * b))


def gamma_limit(b: float) -> Tuple[float, float]:
    """
    Linear behaviour gamma(a) = gamma0 + gamma1 a as a -> 0+.

    :return: tuple (gamma0, gamma1)
    """
    eta0, _ = eta_limit(b)
    gamma0 = b * math.log(b) + (1.0 - b) * math.log(1.0 - b)
    return gamma0, math.log(-eta0 / (b * b))
