"""Exact scalars: rationals, half-integers, digamma values and Gamma quotients.

Rationals are :class:`fractions.Fraction`.  The two constants that appear in
digamma values at integer and half-integer points, Euler's gamma and ln 2,
are kept as basis symbols so that cancellations are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from numbers import Rational

import mpmath

ExactRational = Fraction

DEFAULT_PRECISION = 128


class DomainError(ValueError):
    """Argument outside the domain of an exact special function."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, HalfInteger):
        return x.value
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        # exact binary value; callers wanting decimals should pass strings
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


@dataclass(frozen=True, order=True)
class HalfInteger:
    """A number of the form twice_value / 2."""

    twice_value: int

    @classmethod
    def of(cls, x) -> "HalfInteger":
        if isinstance(x, HalfInteger):
            return x
        f = as_fraction(x)
        if (2 * f).denominator != 1:
            raise DomainError(f"{f} is not an integer or half-integer")
        return cls(int(2 * f))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice_value % 2 == 0

    def __add__(self, other):
        return HalfInteger(self.twice_value + HalfInteger.of(other).twice_value)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInteger(self.twice_value - HalfInteger.of(other).twice_value)

    def __neg__(self):
        return HalfInteger(-self.twice_value)

    def __float__(self):
        return self.twice_value / 2

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class DigammaNumber:
    """rational + gamma_coeff * γ + ln2_coeff * ln 2 with rational coefficients."""

    rational_part: Fraction = Fraction(0)
    gamma_coeff: Fraction = Fraction(0)
    ln2_coeff: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("rational_part", "gamma_coeff", "ln2_coeff"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @classmethod
    def lift(cls, x) -> "DigammaNumber":
        if isinstance(x, DigammaNumber):
            return x
        return cls(as_fraction(x))

    def __add__(self, other):
        if not isinstance(other, (DigammaNumber, int, Fraction)):
            return NotImplemented
        o = DigammaNumber.lift(other)
        return DigammaNumber(
            self.rational_part + o.rational_part,
            self.gamma_coeff + o.gamma_coeff,
            self.ln2_coeff + o.ln2_coeff,
        )

    __radd__ = __add__

    def __neg__(self):
        return DigammaNumber(-self.rational_part, -self.gamma_coeff, -self.ln2_coeff)

    def __sub__(self, other):
        if not isinstance(other, (DigammaNumber, int, Fraction)):
            return NotImplemented
        return self + (-DigammaNumber.lift(other))

    def __rsub__(self, other):
        return DigammaNumber.lift(other) - self

    def __mul__(self, c):
        if isinstance(c, DigammaNumber):
            if c.gamma_coeff or c.ln2_coeff:
                if self.gamma_coeff or self.ln2_coeff:
                    raise TypeError("product of two transcendental DigammaNumbers")
                return c * self.rational_part
            c = c.rational_part
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        c = Fraction(c)
        return DigammaNumber(c * self.rational_part, c * self.gamma_coeff, c * self.ln2_coeff)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, DigammaNumber):
            if c.gamma_coeff or c.ln2_coeff:
                raise TypeError("division by a transcendental DigammaNumber")
            c = c.rational_part
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        if c == 0:
            raise ZeroDivisionError("DigammaNumber division by zero")
        return self * (1 / Fraction(c))

    def __bool__(self):
        return bool(self.rational_part or self.gamma_coeff or self.ln2_coeff)

    def to_mpf(self):
        return (
            mpmath.mpf(self.rational_part.numerator) / self.rational_part.denominator
            + mpmath.mpf(self.gamma_coeff.numerator) / self.gamma_coeff.denominator * mpmath.euler
            + mpmath.mpf(self.ln2_coeff.numerator) / self.ln2_coeff.denominator * mpmath.ln2
        )

    def __str__(self):
        parts = []
        if self.rational_part:
            parts.append(str(self.rational_part))
        for c, sym in ((self.gamma_coeff, "γ"), (self.ln2_coeff, "ln2")):
            if c:
                coeff = "" if abs(c) == 1 else f"{abs(c)}*"
                sign = "-" if c < 0 else "+"
                parts.append(f"{sign} {coeff}{sym}" if parts else f"{'-' if c < 0 else ''}{coeff}{sym}")
        return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GammaQuotient:
    """rational_part * sqrt(pi)**sqrt_pi_power * sqrt(2)**sqrt2_power."""

    rational_part: Fraction
    sqrt_pi_power: int = 0
    sqrt2_power: int = 0

    def __post_init__(self):
        r = as_fraction(self.rational_part)
        s2 = self.sqrt2_power
        # canonical form: sqrt2_power in {0, 1}
        if r and s2:
            q, s2 = divmod(s2, 2)
            r *= Fraction(2) ** q
        if r == 0:
            object.__setattr__(self, "sqrt_pi_power", 0)
            s2 = 0
        object.__setattr__(self, "rational_part", r)
        object.__setattr__(self, "sqrt2_power", s2)

    def __mul__(self, other):
        if isinstance(other, GammaQuotient):
            return GammaQuotient(
                self.rational_part * other.rational_part,
                self.sqrt_pi_power + other.sqrt_pi_power,
                self.sqrt2_power + other.sqrt2_power,
            )
        return GammaQuotient(self.rational_part * as_fraction(other), self.sqrt_pi_power, self.sqrt2_power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GammaQuotient):
            return GammaQuotient(
                self.rational_part / other.rational_part,
                self.sqrt_pi_power - other.sqrt_pi_power,
                self.sqrt2_power - other.sqrt2_power,
            )
        return GammaQuotient(self.rational_part / as_fraction(other), self.sqrt_pi_power, self.sqrt2_power)

    def same_class(self, other: "GammaQuotient") -> bool:
        return (self.sqrt_pi_power, self.sqrt2_power) == (other.sqrt_pi_power, other.sqrt2_power)

    def to_mpf(self):
        r = mpmath.mpf(self.rational_part.numerator) / self.rational_part.denominator
        return r * mpmath.sqrt(mpmath.pi) ** self.sqrt_pi_power * mpmath.sqrt(2) ** self.sqrt2_power


def gamma_exact(x) -> GammaQuotient:
    """Γ(x) for a positive integer or half-integer x."""
    h = HalfInteger.of(x)
    if h.twice_value <= 0:
        raise DomainError(f"Gamma argument must be positive, got {h}")
    if h.is_integer:
        return GammaQuotient(Fraction(factorial(h.twice_value // 2 - 1)))
    n = (h.twice_value - 1) // 2  # x = n + 1/2
    return GammaQuotient(Fraction(factorial(2 * n), 4**n * factorial(n)), 1, 0)


def gamma_quotient(numerators, denominators) -> GammaQuotient:
    """Π Γ(numerators) / Π Γ(denominators), exactly."""
    out = GammaQuotient(Fraction(1))
    for x in numerators:
        out = out * gamma_exact(x)
    for x in denominators:
        out = out / gamma_exact(x)
    return out


def digamma_exact(x) -> DigammaNumber:
    """ψ₀ at a positive integer or half-integer."""
    try:
        h = HalfInteger.of(x)
    except DomainError:
        raise DomainError(f"digamma_exact needs an integer or half-integer, got {x}") from None
    if h.twice_value <= 0:
        raise DomainError(f"digamma_exact needs a positive argument, got {h}")
    if h.is_integer:
        n = h.twice_value // 2
        return DigammaNumber(sum((Fraction(1, j) for j in range(1, n)), Fraction(0)), -1, 0)
    n = (h.twice_value - 1) // 2
    s = sum((Fraction(1, 2 * j - 1) for j in range(1, n + 1)), Fraction(0))
    return DigammaNumber(2 * s, -1, -2)


def to_mpf(x, precision: int = DEFAULT_PRECISION):
    """High-precision value of an exact scalar; caller controls the mp context."""
    with mpmath.workprec(precision):
        if isinstance(x, (DigammaNumber, GammaQuotient)):
            return +x.to_mpf()
        f = as_fraction(x)
        return mpmath.mpf(f.numerator) / f.denominator


def to_float(x, precision: int = DEFAULT_PRECISION) -> float:
    """Evaluate an exact scalar with `precision` working bits, then round to double."""
    with mpmath.workprec(precision + 16):
        if isinstance(x, (DigammaNumber, GammaQuotient)):
            v = x.to_mpf()
        else:
            f = as_fraction(x)
            v = mpmath.mpf(f.numerator) / f.denominator
        return float(v)


def format_rational(x) -> str:
    """'p/q' (or 'p' for integers)."""
    f = as_fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
