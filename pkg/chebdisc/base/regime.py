from enum import Enum


class Regime(Enum):
    NEGATIVE_A = "negative_a"
    MONOTONE = "monotone"
    TRANSITION = "transition"
    OSCILLATORY = "oscillatory"
    REFLECTED = "reflected"


class Saddle(Enum):
    """
    Saddle point of the Kummer phase a numeric h0 is evaluated at. `HANKEL` is the
    single saddle u = a of the Gamma-type mapping.
    """
    U_PLUS = "u_plus"
    U_MINUS = "u_minus"
    HANKEL = "hankel"


class ZeroKind(Enum):
    SMALL = "small"
    LARGE = "large"
    UNCOVERED = "uncovered"


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"
