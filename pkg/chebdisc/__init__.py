import logging

from chebdisc.base.common import (ErrorRow, ExpansionResult, MappingConstants,
                                  PolyParams, SaddleData, ScaledParams, SweepSpec,
                                  ZeroEstimate)
from chebdisc.base.exceptions import (ChebDiscException, ParameterException,
                                      RegimeRefusalException, SolverException)
from chebdisc.base.regime import Regime
from chebdisc.base.scaled import ScaledReal
from chebdisc.exact import eval_difference, eval_exact, eval_scaled, make_params
from chebdisc.expansion import asymptotic_fixed_x, asymptotic_value
from chebdisc.mapping import gamma_negative_a, solve_eta_gamma
from chebdisc.saddle import classify_regime, critical_as, saddles
from chebdisc.zeros import zero_estimates, zeros_exact

# initialize logging
logger = logging.getLogger(__name__)

__all__ = [
    "ChebDiscException",
    "ErrorRow",
    "ExpansionResult",
    "MappingConstants",
    "ParameterException",
    "PolyParams",
    "Regime",
    "RegimeRefusalException",
    "SaddleData",
    "ScaledParams",
    "ScaledReal",
    "SolverException",
    "SweepSpec",
    "ZeroEstimate",
    "asymptotic_fixed_x",
    "asymptotic_value",
    "classify_regime",
    "critical_as",
    "eval_difference",
    "eval_exact",
    "eval_scaled",
    "gamma_negative_a",
    "make_params",
    "saddles",
    "solve_eta_gamma",
    "zero_estimates",
    "zeros_exact",
]
