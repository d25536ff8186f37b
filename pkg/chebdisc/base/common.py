import math
from fractions import Fraction
from typing import FrozenSet, List, NamedTuple, Optional, Tuple

from chebdisc.base.regime import OutputFormat, Regime, ZeroKind
from chebdisc.base.scaled import ScaledReal

# exact rational value of t_n(x, Ncap)
ExactValue = Fraction


class PolyParams(NamedTuple):
    """
    Discrete triple consumed by every evaluator. `Ncap` is the second argument of
    t_n(x, Ncap), i.e. the support size; the scale N used by the asymptotics is
    `Ncap - 1`.
    """
    n: int
    Ncap: int
    x: Fraction

    @property
    def N(self) -> int:
        return self.Ncap - 1


class ScaledParams(NamedTuple):
    a: float
    b: float
    N: Optional[int] = None


class SaddleData(NamedTuple):
    t_plus: complex
    t_minus: complex
    w_plus: complex
    w_minus: complex
    a_minus: float
    a_plus: float
    regime: Regime
    u_plus: Optional[complex] = None
    u_minus: Optional[complex] = None


class MappingConstants(NamedTuple):
    """
    Mapping constants matching the phase function to its canonical form.

    :param eta: None when not applicable (a < 0).
    :param gamma: additive constant of the mapping.
    :param residual: final defect of the defining equation.
    :param bracket: search interval of the eta bisection, if any.
    :param regime: regime the constants were solved in.
    """
    eta: Optional[float]
    gamma: float
    residual: float
    bracket: Optional[Tuple[float, float]]
    regime: Regime


class KummerValue(NamedTuple):
    M: ScaledReal
    Mprime: ScaledReal


class ExpansionResult(NamedTuple):
    value: ScaledReal
    regime: Regime
    prefactor: ScaledReal
    c0: float
    d0: float
    M: ScaledReal
    Mprime: ScaledReal
    envelope: ScaledReal
    mapping: Optional[MappingConstants] = None


class ZeroEstimate(NamedTuple):
    s: int
    location: Optional[float]
    error_exponent: Optional[float]
    kind: ZeroKind

    @property
    def radius(self) -> Optional[float]:
        if self.error_exponent is None:
            return None
        return math.exp(self.error_exponent)


class SweepSpec(NamedTuple):
    b_values: List[Fraction]
    a_values: List[Fraction]
    N_values: List[int]
    regimes: Optional[FrozenSet[Regime]] = None
    integer_x_only: bool = True
    output_path: Optional[str] = None
    format: OutputFormat = OutputFormat.CSV
    delta: Optional[float] = None
    jobs: int = 1


class ErrorRow(NamedTuple):
    a: Fraction
    b: Fraction
    N: int
    x: Fraction
    regime: Optional[Regime]
    exact: ScaledReal
    asym: Optional[ScaledReal] = None
    envelope: Optional[ScaledReal] = None
    rel_err: Optional[float] = None
    env_err: Optional[float] = None
    error: Optional[str] = None

    @property
    def sort_key(self) -> Tuple[Fraction, Fraction, int, Fraction]:
        return self.b, self.a, self.N, self.x


class SlopeFit(NamedTuple):
    a: Fraction
    b: Fraction
    points: int
    slope: float
