"""
Leading-order uniform asymptotic approximations of t_n(x, N+1).

Below the turning point and in the oscillatory region the approximation is built
on the Kummer function M(aN+1, 1, eta N); for a < 0 it is built on 1/Gamma(1-aN).
Points with a > 1/2 are reflected through t_n(x, N+1) = (-1)^n t_n(N-x, N+1).
"""
import cmath
import logging
import math
from fractions import Fraction
from typing import Optional, Tuple, Union

from chebdisc.base.common import ExpansionResult, MappingConstants, ScaledParams
from chebdisc.base.exceptions import (ParameterException, RegimeRefusalException,
                                      SolverException)
from chebdisc.base.regime import Regime, Saddle
from chebdisc.base.scaled import ScaledReal
from chebdisc.mapping import (gamma_hankel, gamma_negative_a, solve_eta_gamma)
from chebdisc.saddle import (check_b, classify_regime, critical_as,
                             default_delta, kummer_saddles, radicand, saddles)
from chebdisc.special import kummer_M, log_gamma

logger = logging.getLogger(__name__)

SQRT_PI = math.sqrt(math.pi)
MIDPOINT_TOLERANCE = 1e-3

Rational = Union[int, str, Fraction]


def h0_saddle_negative(a: float, b: float) -> float:
    """
    h at the Gamma-type saddle u = a for a < 0:

        {2a w_- t_-(1-t_-)[1-(1-t_-)w_-] / ((1-w_-) b sqrt(b^2-4a+4a^2))}^{1/2}
    """
    if a >= 0:
        raise ParameterException(f"`h0_saddle_negative` requires `a` < 0, got {a}")
    data = saddles(ScaledParams(a, b))
    t, w = data.t_minus.real, data.w_minus.real
    value = 2.0 * a * w * t * (1.0 - t) * (1.0 - (1.0 - t) * w) / \
        ((1.0 - w) * b * math.sqrt(radicand(a, b)))
    if value <= 0:
        raise SolverException(f"Nonpositive radicand {value} in `h0` for `a`={a}, "
                              f"`b`={b}")
    return math.sqrt(value)


def h0_hankel(a: float, b: float) -> float:
    """
    h at u = a for the Hankel-loop mapping, valid for any a < a_minus except 0.
    Positive for a < 0, where it equals `h0_saddle_negative`; negative for a > 0.
    """
    check_b(b)
    a_minus, _ = critical_as(b)
    if a == 0 or a >= a_minus:
        raise RegimeRefusalException(f"`h0_hankel` requires a < {a_minus}, a != 0, "
                                     f"got {a}")
    data = saddles(ScaledParams(a, b))
    t, w = data.t_minus.real, data.w_minus.real
    value = 2.0 * t * (1.0 - t) * (1.0 - (1.0 - t) * w) * (1.0 - a) / \
        (b ** 3 * math.sqrt(radicand(a, b)))
    return a / (w - 1.0) * math.sqrt(value)


def h0_saddle_positive(a: float, b: float, eta: float) -> Tuple[complex, complex]:
    """
    h at the Kummer saddles for 0 <= a <= 1/2,

        h(u_-+) = (u_-+ - 1)/(w_+- - 1) * {2t(1-t)[1-(1-t)w] (1-a)(-eta)
                  sqrt(eta^2+4a eta) / (b^3 sqrt(b^2-4a+4a^2))}^{1/2}

    at (t, w) = (t_+-, w_+-). The ratio of square roots is a positive real on
    either side of the turning point, where it is removable but not evaluated.

    :return: tuple (h at u_minus, h at u_plus)
    """
    check_b(b)
    if not 0 <= a <= 0.5:
        raise ParameterException(f"`h0_saddle_positive` requires 0 <= a <= 1/2, "
                                 f"got {a}")
    disc = eta * (eta + 4.0 * a)
    value = radicand(a, b)
    if disc == 0 or value == 0:
        raise SolverException(f"Coalescing saddles at `a`={a}; h0 is only defined "
                              f"by its limit here")
    if (disc > 0) != (value > 0):
        raise SolverException(f"Branch mismatch at `a`={a}, `b`={b}: "
                              f"eta^2+4a eta={disc}, b^2-4a+4a^2={value}")
    scale = (1.0 - a) * (-eta) * math.sqrt(disc / value) / b ** 3
    data = saddles(ScaledParams(a, b))
    u_plus, u_minus = kummer_saddles(a, eta)

    def closed_form(t: complex, w: complex) -> complex:
        return cmath.sqrt(2.0 * t * (1.0 - t) * (1.0 - (1.0 - t) * w) * scale)

    # u_+ - 1 = -u_-, w_- - 1 = -w_+, and symmetrically
    h_plus = u_minus / data.w_plus * closed_form(data.t_minus, data.w_minus)
    ratio = b * b / -eta if a == 0 else u_plus / data.w_minus
    h_minus = ratio * closed_form(data.t_plus, data.w_plus)
    return h_minus, h_plus


def h0_numeric(a: float, b: float, which_saddle: Saddle,
               eta: Optional[float] = None) -> complex:
    """
    h at a saddle as the product (u-1)/(w-1) * dw/du * dt/dtau of the local
    derivatives of the two mappings, independent of the closed forms. For the
    Hankel saddle the prefactor is a/(w_- - 1).

    Both dw/du and dt/dtau carry a factor of |1-2a|, from the mapping and from the
    slope sqrt(1+4b^2(w-1)w) respectively. Close to a = 1/2 the slope is lost to
    cancellation and the quotient is taken at its limit 1.

    :param which_saddle: saddle to evaluate at
    :param eta: mapping constant; solved if omitted and needed
    """
    check_b(b)
    data = saddles(ScaledParams(a, b))
    root_r = cmath.sqrt(complex(radicand(a, b), 0.0))
    if which_saddle is Saddle.HANKEL:
        t, w = data.t_minus, data.w_minus
        mapping_part = (1.0 - a) / (b ** 3 * root_r)
        prefix = a / (w - 1.0)
    else:
        if eta is None:
            eta = solve_eta_gamma(a, b).eta
        u_plus, u_minus = kummer_saddles(a, eta)
        root_d = cmath.sqrt(complex(eta * (eta + 4.0 * a), 0.0))
        mapping_part = root_d * (1.0 - a) * (-eta) / (b ** 3 * root_r)
        if which_saddle is Saddle.U_PLUS:
            t, w, u = data.t_minus, data.w_minus, u_plus
        else:
            if a == 0:
                raise ParameterException("`h0_numeric` at u_minus needs `a` > 0")
            t, w, u = data.t_plus, data.w_plus, u_minus
        prefix = (u - 1.0) / (w - 1.0)
    curvature = 2.0 * t * (1.0 - t) * (1.0 - (1.0 - t) * w)
    if abs(1.0 - 2.0 * a) < MIDPOINT_TOLERANCE:
        return prefix * cmath.sqrt(mapping_part) * cmath.sqrt(curvature)
    slope = cmath.sqrt(1.0 + 4.0 * b * b * (w - 1.0) * w)
    dw_du = cmath.sqrt(mapping_part * (1.0 - 2.0 * a))
    dt_dtau = cmath.sqrt(curvature / slope)
    return prefix * dw_du * dt_dtau


def leading_coeffs(a: float, b: float, eta: Optional[float] = None
                   ) -> Tuple[float, float]:
    """
    Leading coefficients c0 and d0 of the expansion. For a < 0, c0 = sqrt(pi) h0
    and d0 = 0; otherwise they follow from h0 at both Kummer saddles.

    :param eta: mapping constant; solved if omitted
    :return: tuple (c0, d0)
    """
    if a < 0:
        return SQRT_PI * h0_saddle_negative(a, b), 0.0
    if eta is None:
        eta = solve_eta_gamma(a, b).eta
    u_plus, u_minus = kummer_saddles(a, eta)
    if u_plus == u_minus:
        raise SolverException(f"Coalescing Kummer saddles at `a`={a}, `b`={b}")
    h_minus, h_plus = h0_saddle_positive(a, b, eta)
    a00 = (u_minus * h_plus - u_plus * h_minus) / (u_minus - u_plus)
    b00 = (h_minus - h_plus) / (u_minus - u_plus)
    return SQRT_PI * a00.real, SQRT_PI * b00.real


def _validate(n: int, N: int) -> None:
    if not isinstance(n, int) or not isinstance(N, int):
        raise ParameterException(f"`n` and `N` must be integers, got {n!r}, {N!r}")
    if not 0 < n < N:
        raise ParameterException(f"Asymptotics require 0 < n < N, got `n`={n}, "
                                 f"`N`={N}")


def _log_binomial_part(n: int, N: int) -> float:
    return log_gamma(n + N + 2.0) - log_gamma(n + 1.0) - log_gamma(N - n + 1.0)


def _sin_pi(x: Fraction) -> float:
    if x.denominator == 1:
        return 0.0
    return math.sin(math.pi * float(x % 2))


def _gamma_form(n: int, N: int, x: Fraction, a: float, b: float) -> ExpansionResult:
    mapping = gamma_negative_a(a, b)
    c0, d0 = leading_coeffs(a, b)
    ln_prefactor = _log_binomial_part(n, N) + N * mapping.gamma - \
        float(x) * math.log(N) - log_gamma(1.0 - float(x))
    prefactor = ScaledReal.from_log(ln_prefactor, -1 if n % 2 else 1)
    value = prefactor * (c0 / math.sqrt(N))
    return ExpansionResult(
        value=value,
        regime=Regime.NEGATIVE_A,
        prefactor=prefactor,
        c0=c0,
        d0=d0,
        M=ScaledReal.one(),
        Mprime=ScaledReal.zero(),
        envelope=abs(value),
        mapping=mapping,
    )


def _extended_gamma_form(n: int, N: int, x: Fraction, a: float, b: float
                         ) -> ExpansionResult:
    # 1/Gamma(1-aN) continued to aN > 0 as Gamma(aN) sin(pi aN) / pi
    gamma = gamma_hankel(a, b)
    mapping = MappingConstants(eta=None, gamma=gamma, residual=0.0, bracket=None,
                               regime=Regime.MONOTONE)
    c0 = SQRT_PI * h0_hankel(a, b)
    ln_magnitude = _log_binomial_part(n, N) + N * gamma - \
        float(x) * math.log(N) + log_gamma(float(x)) - math.log(math.pi)
    prefactor = ScaledReal.from_log(ln_magnitude, -1 if n % 2 else 1) * _sin_pi(x)
    value = prefactor * (c0 / math.sqrt(N))
    envelope = ScaledReal.from_log(ln_magnitude) * (abs(c0) / math.sqrt(N))
    return ExpansionResult(
        value=value,
        regime=Regime.MONOTONE,
        prefactor=prefactor,
        c0=c0,
        d0=0.0,
        M=ScaledReal.one(),
        Mprime=ScaledReal.zero(),
        envelope=envelope,
        mapping=mapping,
    )


def _kummer_form(n: int, N: int, x: Fraction, a: float, b: float,
                 regime: Regime) -> ExpansionResult:
    mapping = solve_eta_gamma(a, b)
    c0, d0 = leading_coeffs(a, b, mapping.eta)
    kummer = kummer_M(int(x), mapping.eta * N)
    prefactor = ScaledReal.from_log(_log_binomial_part(n, N) + N * mapping.gamma,
                                    -1 if n % 2 else 1)
    sqrt_n = math.sqrt(N)
    value = prefactor * (kummer.M * c0 + kummer.Mprime * d0) / sqrt_n
    envelope = abs(prefactor) * \
        (abs(kummer.M) * abs(c0) + abs(kummer.Mprime) * abs(d0)) / sqrt_n
    return ExpansionResult(
        value=value,
        regime=regime,
        prefactor=prefactor,
        c0=c0,
        d0=d0,
        M=kummer.M,
        Mprime=kummer.Mprime,
        envelope=envelope,
        mapping=mapping,
    )


def asymptotic_value(n: int, N: int, x: Rational, delta: Optional[float] = None
                     ) -> ExpansionResult:
    """
    Leading-order approximation of t_n(x, N+1) with a = x/N and b = n/N.

    :param n: degree, 0 < n < N
    :param N: scale; the support size is N + 1
    :param x: evaluation point. Must be an integer on the Kummer path, which
           covers the oscillatory region and integer points below the turning point.
    :param delta: half-width of the refused transition window around a_minus;
           defaults to 0.5 N^(-2/3)
    :return: approximation with its decomposition
    """
    _validate(n, N)
    x = Fraction(x)
    if x * 2 > N:
        inner = asymptotic_value(n, N, N - x, delta)
        assert inner.regime is not Regime.REFLECTED
        odd = n % 2 == 1
        return inner._replace(
            value=inner.value.negate_if(odd),
            prefactor=inner.prefactor.negate_if(odd),
            regime=Regime.REFLECTED,
        )
    a, b = float(x / N), n / N
    delta = delta or default_delta(N)
    regime = classify_regime(ScaledParams(a, b, N), delta)
    logger.debug(f"Expanding `n`={n} `N`={N} `x`={x} in regime `{regime.value}`")
    if regime is Regime.TRANSITION:
        a_minus, _ = critical_as(b)
        raise RegimeRefusalException(
            f"`a`={a} lies within {delta} of the turning point a_minus={a_minus}; "
            f"no expansion is provided there, use the exact evaluation")
    if regime is Regime.NEGATIVE_A:
        return _gamma_form(n, N, x, a, b)
    if x.denominator != 1:
        if regime is Regime.MONOTONE:
            return _extended_gamma_form(n, N, x, a, b)
        raise ParameterException(f"Non-integer `x`={x} above the turning point needs "
                                 f"a non-integer Kummer parameter, which is not "
                                 f"supported")
    result = _kummer_form(n, N, x, a, b, regime)
    if x * 2 == N and n % 2 == 1:
        # reflection through the midpoint forces t_n(N/2, N+1) = 0 for odd n
        return result._replace(value=ScaledReal.zero())
    return result


def asymptotic_fixed_x(n: int, N: int, x: Rational) -> ExpansionResult:
    """
    Simplified leading forms for fixed x as N grows, without a mapping solve:

        x < 0:  (-1)^n Gamma(n+N+2) N^x n^(-2x-2) / (Gamma(N+1) Gamma(-x))
        x >= 0: (-1)^(n+1) Gamma(n+N+2) N^x n^(-2x-2) Gamma(x+1) sin(pi x)
                / (Gamma(N+1) pi)

    The prefactor absorbs sqrt(N) so that value = prefactor * c0 / sqrt(N).
    """
    _validate(n, N)
    x = Fraction(x)
    limit = N ** 0.25
    if abs(x) > limit:
        raise RegimeRefusalException(f"|x|={abs(x)} exceeds the fixed-x guard "
                                     f"N^(1/4)={limit:.3f}; use `asymptotic_value`")
    x_value = float(x)
    ln_prefactor = log_gamma(n + N + 2.0) - log_gamma(N + 1.0) + \
        x_value * math.log(N) - (2.0 * x_value + 2.0) * math.log(n) + \
        0.5 * math.log(N)
    if x < 0:
        regime = Regime.NEGATIVE_A
        c0 = math.exp(-log_gamma(-x_value))
        scale = c0
    else:
        regime = Regime.MONOTONE
        scale = math.exp(log_gamma(x_value + 1.0)) / math.pi
        c0 = -scale * _sin_pi(x)
    prefactor = ScaledReal.from_log(ln_prefactor, -1 if n % 2 else 1)
    sqrt_n = math.sqrt(N)
    return ExpansionResult(
        value=prefactor * (c0 / sqrt_n),
        regime=regime,
        prefactor=prefactor,
        c0=c0,
        d0=0.0,
        M=ScaledReal.one(),
        Mprime=ScaledReal.zero(),
        envelope=abs(prefactor) * (scale / sqrt_n),
    )
