"""Cauchy-Laguerre biorthogonal polynomials for the Bures-Hall weight

    W(x, y) = x^α y^(α+1) e^(-x-y) / (x + y),

with α = n - m - 1/2.  Coefficients are exact rationals times the common
factor √(2/π); numerical identities are evaluated in mpmath.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath

from ._poly import limit_at
from .exact import DEFAULT_PRECISION, DomainError, GammaQuotient, HalfInteger, gamma_quotient


@dataclass(frozen=True)
class EnsembleParams:
    """Subsystem dimensions m ≤ n of the bipartite system."""

    m: int
    n: int
    alpha: HalfInteger = field(init=False, compare=False)
    d: Fraction = field(init=False, compare=False)

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise TypeError("m and n must be integers")
        if self.m < 1 or self.n < self.m:
            raise DomainError(f"need 1 <= m <= n, got m={self.m}, n={self.n}")
        object.__setattr__(self, "alpha", HalfInteger(2 * (self.n - self.m) - 1))
        a = self.a
        object.__setattr__(self, "d", self.m * (2 * a + self.m + 1) / 2)

    @property
    def a(self) -> Fraction:
        """α as a Fraction."""
        return Fraction(2 * (self.n - self.m) - 1, 2)

    @property
    def boundary(self) -> bool:
        """True for α = -1/2 (square case n = m)."""
        return self.n == self.m


class PrefactorClass(enum.Enum):
    ONE = "1"
    SQRT_2_OVER_PI = "sqrt(2/pi)"


_CLASS_VALUE = {
    PrefactorClass.ONE: GammaQuotient(Fraction(1)),
    PrefactorClass.SQRT_2_OVER_PI: GammaQuotient(Fraction(1), -1, 1),
}


@dataclass(frozen=True)
class ScaledPolynomial:
    """prefactor * Σ coeffs[j] x^j with exact rational coeffs."""

    coeffs: tuple
    prefactor_class: PrefactorClass = PrefactorClass.ONE

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(Fraction(x) for x in c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> GammaQuotient:
        return _CLASS_VALUE[self.prefactor_class] * self.coeffs[-1]

    def coefficient(self, j: int) -> GammaQuotient:
        c = self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)
        return _CLASS_VALUE[self.prefactor_class] * c

    def deriv(self) -> "ScaledPolynomial":
        return ScaledPolynomial(
            tuple(j * c for j, c in enumerate(self.coeffs) if j), self.prefactor_class
        )

    def prefactor_mpf(self):
        return _CLASS_VALUE[self.prefactor_class].to_mpf()

    def mp_coeffs(self):
        """Coefficients with the prefactor applied, at the current mp precision."""
        pf = self.prefactor_mpf()
        return [pf * mpmath.mpf(c.numerator) / c.denominator for c in self.coeffs]

    def __call__(self, x):
        acc = mpmath.mpf(0)
        for c in reversed(self.mp_coeffs()):
            acc = acc * x + c
        return acc


ZERO_POLY = ScaledPolynomial((), PrefactorClass.SQRT_2_OVER_PI)


def _explicit_coeffs(k: int, params: EnsembleParams, shift: int):
    """Rational parts of the explicit sum; shift=0 gives p_k, shift=1 gives q_k."""
    if k < 0:
        return ()
    a = params.alpha
    target = _CLASS_VALUE[PrefactorClass.SQRT_2_OVER_PI]
    out = []
    for j in range(k + 1):
        g = gamma_quotient(
            [a + a + (j + k + 2)],
            [j + 1, a + (j + 1 + shift), a + a + (j + 2), k - j + 1],
        ) * GammaQuotient(Fraction((-1) ** (k + j)), 0, 1)
        if shift:
            g = g * (params.a + k + 1)
        q = g / target
        if (q.sqrt_pi_power, q.sqrt2_power) != (0, 0):
            raise AssertionError("coefficient left the sqrt(2/pi) class")
        out.append(q.rational_part)
    return tuple(out)


@lru_cache(maxsize=None)
def poly_p(k: int, params: EnsembleParams) -> ScaledPolynomial:
    """p_k; the zero polynomial for k < 0."""
    return ScaledPolynomial(_explicit_coeffs(k, params, 0), PrefactorClass.SQRT_2_OVER_PI)


@lru_cache(maxsize=None)
def poly_q(k: int, params: EnsembleParams) -> ScaledPolynomial:
    """q_k; the zero polynomial for k < 0."""
    return ScaledPolynomial(_explicit_coeffs(k, params, 1), PrefactorClass.SQRT_2_OVER_PI)


def leading_coeff_S(k: int, params: EnsembleParams) -> GammaQuotient:
    """S_k, the common leading coefficient of p_k and q_k.

    Uses the form √2 Γ(2α+2k+2) / (k! Γ(α+k+1) Γ(2α+k+2)), in which the
    removable k Γ(k) and (2α+k)(2α+k+1) Γ(2α+k) products are already
    collapsed, so k = 0 and α = -1/2 need no special casing.
    """
    if k < 0:
        raise DomainError("S_k needs k >= 0")
    a = params.alpha
    return gamma_quotient([a + a + (2 * k + 2)], [k + 1, a + (k + 1), a + a + (k + 2)]) * GammaQuotient(
        Fraction(1), 0, 1
    )


def ratio_rho(k: int, params: EnsembleParams) -> Fraction:
    """S_{k-1}/S_k (zero at k = 0, where p_{-1} vanishes)."""
    if k == 0:
        return Fraction(0)
    a = params.a
    return Fraction(k) * (2 * a + k + 1) / (2 * (2 * a + 2 * k + 1))


def ratio_sigma(k: int, params: EnsembleParams) -> Fraction:
    """S_k/S_{k+1}."""
    return ratio_rho(k + 1, params)


def coeff_cd(which: str, row: int, col: int, params: EnsembleParams) -> Fraction:
    """Expansion coefficients of x p_k and x q_j, indexed (row, col) = (j, k).

    ``coeff_cd("c", j, k)`` is c_{j,k} in  x p_k = Σ_j c_{j,k} p_j  and
    ``coeff_cd("d", j, k)`` is d_{k,j} in  x q_j = Σ_k d_{k,j} q_k, so that
    c + d = 2(α + j + 1) for every pair.
    """
    if row < 0 or col < 0:
        raise DomainError("coefficient indices must be nonnegative")
    a = params.a
    j, k = row, col
    if which == "c":
        if j <= k - 2:
            return 2 * (a + j + 1)
        if j == k - 1:
            return 2 * (a + k) - ratio_rho(k, params)
        if j == k:
            return a + k + 1 + ratio_rho(k, params) - ratio_sigma(k, params)
        if j == k + 1:
            return ratio_sigma(k, params)
        return Fraction(0)
    if which == "d":
        return 2 * (a + j + 1) - coeff_cd("c", j, k, params)
    raise ValueError(f"which must be 'c' or 'd', got {which!r}")


def r_coeffs(k: int, params: EnsembleParams):
    """(r_{k,2}, r_{k,1}, r_{k,0}, r_{k,-1}) of the four-term relation for p."""
    return limit_at(lambda a: _r_coeffs(a, Fraction(k)), params.a)


def _r_coeffs(a, m):
    r2 = (m + 2) * (2 * a + m + 3) / (2 * (2 * a + 2 * m + 5))
    r1 = (4 * a**2 + 14 * (a + 1) + 6 * a * m + m * (3 * m + 13)) / (2 * (2 * a + 2 * m + 5))
    r0 = (4 * a**2 + 3 * m**2 + 6 * a * (m + 1) + 5 * m + 2) / (2 * (2 * a + 2 * m + 1))
    rm1 = m * (2 * a + m + 1) / (2 * (2 * a + 2 * m + 1))
    return r2, r1, r0, rm1


def s_coeffs(k: int, params: EnsembleParams):
    """(s_{k,2}, s_{k,1}, s_{k,0}, s_{k,-1}) of the four-term relation for q."""
    return limit_at(lambda a: _s_coeffs(a, Fraction(k)), params.a)


def _s_coeffs(a, m):
    s2 = (m + 2) * (2 * a + m + 3) / (2 * (a + m + 2) * (2 * a + 2 * m + 5))
    s1 = (4 * a**3 + 2 * a**2 * (5 * m + 11) + a * (m + 2) * (9 * m + 17) + (m + 1) * (m + 2) * (3 * m + 8)) / (
        2 * (a + m + 1) * (a + m + 2) * (2 * a + 2 * m + 5)
    )
    s0 = (2 * (a + 1) ** 2 * (2 * a + 1) + 3 * m**3 + (9 * a + 10) * m**2 + (2 * a + 3) * (5 * a + 3) * m) / (
        2 * (a + m + 1) * (a + m + 2) * (2 * a + 2 * m + 1)
    )
    sm1 = m * (2 * a + m + 1) / (2 * (a + m + 1) * (2 * a + 2 * m + 1))
    return s2, s1, s0, sm1


def mpq(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def relative_residual(lhs, terms) -> float:
    """|lhs - Σ terms| / (|lhs| + Σ|terms|); zero when everything vanishes."""
    rhs = mpmath.fsum(terms)
    scale = abs(lhs) + mpmath.fsum(abs(t) for t in terms)
    if scale == 0:
        return 0.0
    return float(abs(lhs - rhs) / scale)


def structure_residual_poly(kind: str, k: int, x, params: EnsembleParams, precision=DEFAULT_PRECISION) -> float:
    """Residual of the x d/dx structure relation for p_k or q_k."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    if kind not in ("p", "q"):
        raise ValueError(f"kind must be 'p' or 'q', got {kind!r}")
    poly = poly_p if kind == "p" else poly_q
    rho, sig = ratio_rho(k, params), ratio_sigma(k, params)
    sgn = 1 if kind == "p" else -1
    with mpmath.workprec(precision):
        x = mpmath.mpf(x)
        f = [poly(k + i, params)(x) for i in (-1, 0, 1)]
        lhs = x * poly(k, params).deriv()(x)
        terms = [
            mpq(rho) * f[0],
            -mpq(params.a + 1 - sgn * (sig - rho)) * f[1],
            x * f[1],
            -mpq(sig) * f[2],
        ]
        return relative_residual(lhs, terms)


def four_term_residual_poly(kind: str, k: int, x, params: EnsembleParams, precision=DEFAULT_PRECISION) -> float:
    """Residual of the four-term recurrence linking degrees k-1..k+2."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    a = params.a
    with mpmath.workprec(precision):
        x = mpmath.mpf(x)
        if kind == "p":
            f = {i: poly_p(k + i, params)(x) for i in (-1, 0, 1, 2)}
            lhs = x * (f[1] - f[0])
            coeffs = r_coeffs(k, params)
        elif kind == "q":
            f = {i: poly_q(k + i, params)(x) for i in (-1, 0, 1, 2)}
            lhs = x * (f[1] / mpq(a + k + 2) - f[0] / mpq(a + k + 1))
            coeffs = s_coeffs(k, params)
        else:
            raise ValueError(f"kind must be 'p' or 'q', got {kind!r}")
        terms = [mpq(c) * f[i] for c, i in zip(coeffs, (2, 1, 0, -1))]
        return relative_residual(lhs, terms)


def single_sum_residual(kind: str, x, params: EnsembleParams, precision=DEFAULT_PRECISION) -> float:
    """Residual of the closed forms for 2Σ(α+j+1)p_j, 2(α+m+1)Σq_k and 2Σq_k."""
    m, a = params.m, params.a
    rho, sig = ratio_rho(m, params), ratio_sigma(m, params)
    with mpmath.workprec(precision):
        x = mpmath.mpf(x)
        if kind == "pq-check":
            lhs = 2 * mpmath.fsum(poly_q(j, params)(x) for j in range(m))
            return relative_residual(lhs, [poly_q(m - 1, params)(x), poly_p(m - 1, params)(x)])
        if kind == "p-hat":
            poly, inner, sgn = poly_p, lambda j: 2 * (a + j + 1), 1
        elif kind == "q-check":
            poly, inner, sgn = poly_q, lambda j: 2 * (a + m + 1), -1
        else:
            raise ValueError(f"unknown single-sum identity {kind!r}")
        lhs = mpmath.fsum(mpq(inner(j)) * poly(j, params)(x) for j in range(m))
        f = [poly(m + i, params)(x) for i in (-1, 0, 1)]
        terms = [
            mpq(rho) * f[0],
            -mpq(sig) * f[2],
            x * f[1],
            -mpq(a + m + 1 - sgn * (sig - rho)) * f[1],
        ]
        return relative_residual(lhs, terms)
