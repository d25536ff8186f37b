import math
from fractions import Fraction
from typing import List, Optional

from chebdisc.base.common import ErrorRow, PolyParams
from chebdisc.base.engine import EngineContext
from chebdisc.base.regime import Regime
from chebdisc.base.scaled import ScaledReal
from chebdisc.base.table import ResultTableContext


def get_table_context(name: Optional[str] = None,
                      sweep_id: str = "test",
                      engine_context: Optional[EngineContext] = None,
                      ) -> ResultTableContext:
    engine_context = engine_context or EngineContext("results", "sqlite://")
    return ResultTableContext(
        name=name or "tbl",
        engine_context=engine_context,
        comment="The table",
        batch_params={"sweep_id": sweep_id},
    )


def get_error_rows() -> List[ErrorRow]:
    return [
        ErrorRow(
            a=Fraction(-1, 2),
            b=Fraction(1, 2),
            N=100,
            x=Fraction(-50),
            regime=Regime.NEGATIVE_A,
            exact=ScaledReal(1, 1.25, 120),
            asym=ScaledReal(1, 1.24, 120),
            envelope=ScaledReal(1, 1.24, 120),
            rel_err=0.008,
            env_err=0.01 / 1.24,
        ),
        ErrorRow(
            a=Fraction(1, 10),
            b=Fraction(1, 2),
            N=20,
            x=Fraction(2),
            regime=Regime.TRANSITION,
            exact=ScaledReal(-1, 3.5, 4),
            error="RegimeRefusalException: refused",
        ),
    ]


def t1(x: Fraction, Ncap: int) -> Fraction:
    """
    Closed form t_1(x, Ncap) = 2x - Ncap + 1.
    """
    return 2 * x - Ncap + 1


def t2(x: Fraction, Ncap: int) -> Fraction:
    """
    Closed form t_2(x, Ncap) = 6x^2 - 6(Ncap-1)x + (Ncap-1)(Ncap-2).
    """
    return 6 * x * x - 6 * (Ncap - 1) * x + (Ncap - 1) * (Ncap - 2)


def relative_difference(first: float, second: float) -> float:
    return abs(first - second) / max(abs(first), abs(second), 1e-300)


def log10_ratio(first: ScaledReal, second: ScaledReal) -> float:
    """
    log10 |first / second|, finite for nonzero arguments of any magnitude.
    """
    return first.log10_abs() - second.log10_abs()


def scaled_close(first: ScaledReal, second: ScaledReal, rel_tol: float) -> bool:
    if first.sign != second.sign:
        return False
    if first.sign == 0:
        return True
    return abs(math.expm1(log10_ratio(first, second) * math.log(10.0))) <= rel_tol


def params(n: int, N: int, x) -> PolyParams:
    return PolyParams(n, N + 1, Fraction(x))
