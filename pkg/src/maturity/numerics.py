"""Exact rational scalars, high-precision approximate scalars, counting primitives.

Every probability in this package is an exact ``fractions.Fraction`` unless the
generating family has irrational weights, in which case values are carried by
:class:`ApproxReal`: a fixed-precision decimal scalar that refuses to resolve
comparisons closer than its tolerance.  Approximate arithmetic can therefore
flag a verdict as indeterminate, but it can never manufacture one.

Serialization convention: rationals render as ``"num/den"`` (integers may omit
the ``"/1"``); approximate values render as plain decimal strings.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction
from typing import Union

from .errors import InvalidParameterError

#: Exact rational scalar.  ``fractions.Fraction`` already guarantees the
#: canonical form this package relies on: positive denominator and
#: gcd(|num|, den) = 1 after every operation.
Rational = Fraction

Scalar = Union[Fraction, "ApproxReal"]

DEFAULT_PRECISION_BITS = 256
DEFAULT_TOLERANCE = Decimal("1e-30")
PRECISION_ENV_VAR = "MATURITY_PRECISION_BITS"


def default_precision_bits() -> int:
    """Working precision for approximate mode, overridable via the environment."""
    raw = os.environ.get(PRECISION_ENV_VAR)
    if raw is None:
        return DEFAULT_PRECISION_BITS
    try:
        bits = int(raw)
    except ValueError as exc:
        raise InvalidParameterError(
            f"{PRECISION_ENV_VAR} must be a positive integer, got {raw!r}"
        ) from exc
    if bits <= 0:
        raise InvalidParameterError(
            f"{PRECISION_ENV_VAR} must be a positive integer, got {raw!r}"
        )
    return bits


def _context_digits(bits: int) -> int:
    # Decimal contexts count decimal digits; add guard digits so accumulated
    # rounding stays far below any tolerance in use.
    return max(28, math.ceil(bits * math.log10(2)) + 5)


class Ordering(Enum):
    """Three-way comparison outcome, with an honest fourth state.

    WITHIN_TOLERANCE means the two sides are too close for approximate
    arithmetic to order; exact comparisons never produce it.
    """

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    WITHIN_TOLERANCE = "within_tolerance"


@dataclass(frozen=True)
class ApproxReal:
    """High-precision decimal scalar with an explicit comparison tolerance."""

    value: Decimal
    precision_bits: int = DEFAULT_PRECISION_BITS
    tolerance: Decimal = DEFAULT_TOLERANCE

    def __post_init__(self) -> None:
        if self.precision_bits <= 0:
            raise InvalidParameterError("precision_bits must be positive")
        if self.tolerance <= 0:
            raise InvalidParameterError("tolerance must be positive")

    @classmethod
    def from_fraction(
        cls,
        value: Fraction,
        precision_bits: int | None = None,
        tolerance: Decimal | None = None,
    ) -> "ApproxReal":
        bits = precision_bits if precision_bits is not None else default_precision_bits()
        tol = tolerance if tolerance is not None else DEFAULT_TOLERANCE
        with localcontext() as ctx:
            ctx.prec = _context_digits(bits)
            dec = Decimal(value.numerator) / Decimal(value.denominator)
        return cls(dec, bits, tol)

    def _combine(self, other: object, fn, swapped: bool = False):
        if isinstance(other, ApproxReal):
            bits = min(self.precision_bits, other.precision_bits)
            tol = max(self.tolerance, other.tolerance)
        elif isinstance(other, (int, Fraction)):
            bits, tol = self.precision_bits, self.tolerance
        else:
            return NotImplemented
        with localcontext() as ctx:
            ctx.prec = _context_digits(bits)
            rhs = _as_decimal(other)
            value = fn(rhs, self.value) if swapped else fn(self.value, rhs)
        return ApproxReal(value, bits, tol)

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._combine(other, lambda a, b: a - b, swapped=True)

    def __mul__(self, other):
        return self._combine(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._combine(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._combine(other, lambda a, b: a / b, swapped=True)

    def __neg__(self) -> "ApproxReal":
        return ApproxReal(-self.value, self.precision_bits, self.tolerance)


def _as_decimal(x: object) -> Decimal:
    """Convert under the ambient decimal context."""
    if isinstance(x, ApproxReal):
        return x.value
    if isinstance(x, int):
        return Decimal(x)
    if isinstance(x, Fraction):
        return Decimal(x.numerator) / Decimal(x.denominator)
    raise TypeError(f"cannot convert {type(x).__name__} to Decimal")


def compare_values(x: Scalar | int, y: Scalar | int) -> Ordering:
    """Order two scalars; approximate operands get the tolerance treatment."""
    if isinstance(x, ApproxReal) or isinstance(y, ApproxReal):
        bits = min(
            v.precision_bits for v in (x, y) if isinstance(v, ApproxReal)
        )
        tol = max(v.tolerance for v in (x, y) if isinstance(v, ApproxReal))
        with localcontext() as ctx:
            ctx.prec = _context_digits(bits)
            diff = _as_decimal(x) - _as_decimal(y)
        if abs(diff) <= tol:
            return Ordering.WITHIN_TOLERANCE
        return Ordering.LESS if diff < 0 else Ordering.GREATER
    if x == y:
        return Ordering.EQUAL
    return Ordering.LESS if x < y else Ordering.GREATER


def is_zero(x: Scalar | int) -> bool:
    """Exact zero test, or indistinguishable-from-zero in approximate mode."""
    if isinstance(x, ApproxReal):
        return abs(x.value) <= x.tolerance
    return x == 0


def binomial_coefficient(n: int, k: int) -> int:
    """C(n, k), with the out-of-range convention C(n, k) = 0.

    The convention is load-bearing: sums over population counts rely on
    out-of-support terms vanishing instead of erroring.
    """
    if n < 0:
        raise InvalidParameterError(f"binomial_coefficient needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling_factorial(a: int, j: int) -> int:
    """a·(a−1)·…·(a−j+1); 1 when j = 0; 0 when j > a (population exhausted)."""
    if a < 0 or j < 0:
        raise InvalidParameterError("falling_factorial needs nonnegative arguments")
    if j > a:
        return 0
    return math.perm(a, j)


def rising_factorial(a: Fraction, j: int) -> Fraction:
    """a·(a+1)·…·(a+j−1); 1 when j = 0.  Exact for rational a."""
    if j < 0:
        raise InvalidParameterError("rising_factorial needs j >= 0")
    out = Fraction(1)
    for step in range(j):
        out *= a + step
    return out


def parse_rational(text: str) -> Fraction:
    """Parse "num/den", integer, or decimal strings into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameterError(f"not a rational number: {text!r}") from exc


def as_fraction(value: Fraction | int | str) -> Fraction:
    """Coerce trusted-exact inputs; floats are rejected on purpose.

    A float like 0.1 would silently become the binary fraction
    3602879701896397/36028797018963968, which is never what the exact
    contracts mean.  Callers should pass Fraction, int, or a string.
    """
    if isinstance(value, bool):
        raise InvalidParameterError("booleans are not probabilities")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InvalidParameterError(
        f"expected Fraction, int, or rational string, got {type(value).__name__}"
    )


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def decimal_string(x: Scalar, significant_digits: int = 12) -> str:
    """Deterministic decimal rendering with at most the given significance."""
    if significant_digits <= 0:
        raise InvalidParameterError("significant_digits must be positive")
    with localcontext() as ctx:
        ctx.prec = significant_digits
        if isinstance(x, ApproxReal):
            return str(+x.value)
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def scalar_to_string(x: Scalar) -> str:
    """Serialization used in JSON payloads: exact "num/den" or a decimal."""
    if isinstance(x, ApproxReal):
        return decimal_string(x, 36)
    return format_rational(x)
