import math
from fractions import Fraction
from typing import Tuple, Union

from chebdisc.base.exceptions import ParameterException

LN10 = math.log(10.0)
LOG10_2 = math.log10(2.0)

# beyond this decimal gap the smaller addend is below half an ulp of the larger
_ADD_CUTOFF = 18

Number = Union["ScaledReal", int, float]


def _power_of_ten(exponent: int) -> float:
    if exponent >= 0:
        return 10.0 ** exponent
    return 1.0 / 10.0 ** -exponent


def _normalize(mantissa: float, exp10: int) -> Tuple[float, int]:
    """
    Shift a positive finite mantissa into [1, 10), adjusting the exponent.
    """
    shift = math.floor(math.log10(mantissa))
    if shift > 0:
        mantissa = mantissa / _power_of_ten(shift) if shift < 300 else \
            mantissa / _power_of_ten(shift // 2) / _power_of_ten(shift - shift // 2)
    elif shift < 0:
        mantissa = mantissa * _power_of_ten(-shift) if shift > -300 else \
            mantissa * _power_of_ten(-shift // 2) * _power_of_ten(-shift + shift // 2)
    exp10 += shift
    while mantissa >= 10.0:
        mantissa /= 10.0
        exp10 += 1
    while mantissa < 1.0:
        mantissa *= 10.0
        exp10 -= 1
    return mantissa, exp10


class ScaledReal:
    """
    Signed real number stored as `sign * mantissa * 10**exp10` with the mantissa in
    [1, 10) and an unbounded integer exponent. Used for prefactors such as
    Gamma(n+N+2)*exp(N*gamma) that overflow double precision, and for values of
    oscillating functions whose sign must survive arithmetic.

    Instances are treated as immutable; all operations return new instances.
    """
    __slots__ = ("sign", "mantissa", "exp10")

    def __init__(self, sign: int, mantissa: float = 1.0, exp10: int = 0):
        """
        :param sign: -1, 0 or +1. A zero sign represents exactly zero.
        :param mantissa: positive finite magnitude; normalized into [1, 10).
        :param exp10: decimal exponent.
        """
        if sign not in (-1, 0, 1):
            raise ParameterException(f"Invalid sign `{sign}`")
        if sign == 0:
            self.sign, self.mantissa, self.exp10 = 0, 0.0, 0
            return
        if not math.isfinite(mantissa) or mantissa <= 0.0:
            raise ParameterException(f"Invalid mantissa `{mantissa}`")
        self.sign = sign
        self.mantissa, self.exp10 = _normalize(float(mantissa), int(exp10))

    @classmethod
    def zero(cls) -> "ScaledReal":
        return cls(0)

    @classmethod
    def one(cls) -> "ScaledReal":
        return cls(1, 1.0, 0)

    @classmethod
    def from_float(cls, value: float) -> "ScaledReal":
        if not math.isfinite(value):
            raise ParameterException(f"Cannot scale non-finite value `{value}`")
        if value == 0.0:
            return cls.zero()
        return cls(1 if value > 0 else -1, abs(value), 0)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "ScaledReal":
        """
        Convert an exact rational with a correctly rounded mantissa.
        """
        if value == 0:
            return cls.zero()
        sign = 1 if value > 0 else -1
        num, den = abs(value.numerator), value.denominator
        exp10 = math.floor((num.bit_length() - den.bit_length()) * LOG10_2)
        if exp10 >= 0:
            ratio = Fraction(num, den * 10 ** exp10)
        else:
            ratio = Fraction(num * 10 ** -exp10, den)
        while ratio >= 10:
            ratio /= 10
            exp10 += 1
        while ratio < 1:
            ratio *= 10
            exp10 -= 1
        return cls(sign, float(ratio), exp10)

    @classmethod
    def from_log(cls, ln_abs: float, sign: int = 1) -> "ScaledReal":
        """
        Build `sign * exp(ln_abs)` without forming the exponential in double precision.

        :param ln_abs: natural logarithm of the magnitude.
        :param sign: sign of the result.
        """
        if sign == 0:
            return cls.zero()
        if not math.isfinite(ln_abs):
            if ln_abs < 0:
                return cls.zero()
            raise ParameterException(f"Cannot scale infinite logarithm `{ln_abs}`")
        exp10 = math.floor(ln_abs / LN10)
        return cls(sign, math.exp(ln_abs - exp10 * LN10), exp10)

    @classmethod
    def exp(cls, value: float) -> "ScaledReal":
        return cls.from_log(value, 1)

    @classmethod
    def _coerce(cls, other: Number) -> "ScaledReal":
        if isinstance(other, ScaledReal):
            return other
        if isinstance(other, (int, float, Fraction)):
            if isinstance(other, Fraction):
                return cls.from_fraction(other)
            return cls.from_float(float(other))
        return NotImplemented

    def __mul__(self, other: Number) -> "ScaledReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.sign == 0 or other.sign == 0:
            return ScaledReal.zero()
        return ScaledReal(self.sign * other.sign, self.mantissa * other.mantissa,
                          self.exp10 + other.exp10)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "ScaledReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.sign == 0:
            raise ZeroDivisionError("ScaledReal division by zero")
        if self.sign == 0:
            return ScaledReal.zero()
        return ScaledReal(self.sign * other.sign, self.mantissa / other.mantissa,
                          self.exp10 - other.exp10)

    def __rtruediv__(self, other: Number) -> "ScaledReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __add__(self, other: Number) -> "ScaledReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.sign == 0:
            return self
        if self.sign == 0:
            return other
        large, small = (self, other) if self.exp10 >= other.exp10 else (other, self)
        gap = large.exp10 - small.exp10
        if gap > _ADD_CUTOFF:
            return large
        total = large.sign * large.mantissa + \
            small.sign * small.mantissa * _power_of_ten(-gap)
        if total == 0.0:
            return ScaledReal.zero()
        return ScaledReal(1 if total > 0 else -1, abs(total), large.exp10)

    __radd__ = __add__

    def __neg__(self) -> "ScaledReal":
        if self.sign == 0:
            return self
        return ScaledReal(-self.sign, self.mantissa, self.exp10)

    def __sub__(self, other: Number) -> "ScaledReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> "ScaledReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __abs__(self) -> "ScaledReal":
        if self.sign >= 0:
            return self
        return -self

    def __bool__(self) -> bool:
        return self.sign != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScaledReal):
            return NotImplemented
        return (self.sign, self.mantissa, self.exp10) == \
            (other.sign, other.mantissa, other.exp10)

    def __hash__(self) -> int:
        return hash((self.sign, self.mantissa, self.exp10))

    def __reduce__(self):
        return ScaledReal, (self.sign, self.mantissa or 1.0, self.exp10)

    def __repr__(self) -> str:
        if self.sign == 0:
            return "ScaledReal(0)"
        return f"ScaledReal({'-' if self.sign < 0 else ''}{self.mantissa!r}e{self.exp10})"

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        return f"{'-' if self.sign < 0 else ''}{self.mantissa:.17g}e{self.exp10:+d}"

    def negate_if(self, condition: bool) -> "ScaledReal":
        return -self if condition else self

    def as_tuple(self) -> Tuple[int, float, int]:
        return self.sign, self.mantissa, self.exp10

    def log10_abs(self) -> float:
        if self.sign == 0:
            return -math.inf
        return self.exp10 + math.log10(self.mantissa)

    def ln_abs(self) -> float:
        return self.log10_abs() * LN10

    def to_float(self) -> float:
        """
        Convert to a double, saturating to +-inf on overflow and 0 on underflow.
        """
        if self.sign == 0:
            return 0.0
        if self.exp10 > 308:
            return math.copysign(math.inf, self.sign)
        if self.exp10 < -340:
            return 0.0 * self.sign
        try:
            value = self.mantissa * 10.0 ** self.exp10
        except OverflowError:
            return math.copysign(math.inf, self.sign)
        return self.sign * value
