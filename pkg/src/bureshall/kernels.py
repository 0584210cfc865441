"""Cauchy transforms, correlation kernels and their Christoffel-Darboux and
derivative identities.

Throughout, ``P(k, x)`` and ``Q(k, x)`` denote the transforms evaluated at the
negative argument -x, x > 0, where they are real and smooth:

    P_k(-x) = -∫ v^α e^{-v} p_k(v) / (x + v) dv
    Q_k(-x) = -∫ w^{α+1} e^{-w} q_k(w) / (x + w) dw.

Expanding p_k in monomials reduces both to J(s, x) = ∫ v^s e^{-v}/(x+v) dv.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath
import numpy as np
from scipy.special import roots_genlaguerre, roots_jacobi

from . import _appendix as A
from . import _hooks
from ._poly import limit_at
from .biorth import (
    EnsembleParams,
    mpq,
    poly_p,
    poly_q,
    ratio_rho,
    ratio_sigma,
    relative_residual,
)
from .exact import DEFAULT_PRECISION, DomainError, HalfInteger

# bits that must survive the J recursion before falling back to quadrature
GUARD_BITS = 64
# per-step agreement (in leading bits) that flags a cancelling step
STEP_CANCEL_BITS = 10


class QuadratureKind(enum.Enum):
    GAUSS_LAGUERRE = "gauss-laguerre"
    GAUSS_LEGENDRE_COMPOSITE = "gauss-legendre-composite"


@dataclass(frozen=True)
class QuadratureRule:
    nodes: tuple
    weights: tuple
    kind: QuadratureKind
    order: float = 0.0

    def __post_init__(self):
        if len(self.nodes) != len(self.weights):
            raise ValueError("nodes and weights differ in length")
        if any(w <= 0 for w in self.weights):
            raise ValueError("quadrature weights must be positive")


@lru_cache(maxsize=None)
def gauss_laguerre(n: int, order: float) -> QuadratureRule:
    """n-point rule for ∫_0^∞ r^order e^{-r} f(r) dr."""
    x, w = roots_genlaguerre(n, order)
    return QuadratureRule(tuple(x), tuple(w), QuadratureKind.GAUSS_LAGUERRE, order)


@lru_cache(maxsize=None)
def _jacobi01(n: int, a: float, b: float):
    """Nodes/weights for ∫_0^1 u^a (1-u)^b f(u) du."""
    t, w = roots_jacobi(n, b, a)
    return (1 + t) / 2, w / 2 ** (a + b + 1)


@lru_cache(maxsize=None)
def _legendre(n: int):
    return np.polynomial.legendre.leggauss(n)


# ---------------------------------------------------------------- J integrals


def _mp_gamma_half(s2: int):
    return mpmath.gamma(mpmath.mpf(s2) / 2)


def _j_quad(s, x):
    s, x = mpmath.mpf(s), mpmath.mpf(x)
    f = lambda v: v**s * mpmath.exp(-v) / (x + v)
    return mpmath.quad(f, [0, 1, max(x, 2), mpmath.inf])


def _j_base(s2: int, x):
    if s2 == -1:
        # J(-1/2, x) = π e^x erfc(√x)/√x
        return mpmath.pi * mpmath.exp(x) * mpmath.erfc(mpmath.sqrt(x)) / mpmath.sqrt(x)
    if s2 == 0:
        return mpmath.exp(x) * mpmath.e1(x)
    raise ValueError(s2)


def j_chain(s2_max: int, x, parity: int, *, method: str = "auto"):
    """J(s, x) for s = parity/2 - 1 ... s2_max/2 in unit steps.

    Returns (values, step_bits, lost_bits): values[i] has 2s = start + 2i;
    step_bits[i] is how many leading bits Γ(s) and x J(s-1) share at that
    step; lost_bits[i] is the accumulated loss of relative accuracy.
    """
    start = -1 if parity else 0
    x = mpmath.mpf(x)
    if x <= 0:
        raise DomainError("J(s, x) needs x > 0")
    budget = mpmath.mp.prec - GUARD_BITS
    vals = [_j_base(start, x) if method != "quad" else _j_quad(mpmath.mpf(start) / 2, x)]
    steps, lost = [0.0], [0.0]
    acc = 0.0
    fallback = method == "quad"
    g = None
    for s2 in range(start + 2, s2_max + 1, 2):
        s = mpmath.mpf(s2) / 2
        # Γ(s) by Γ(s) = (s-1) Γ(s-1)
        g = _mp_gamma_half(s2) if g is None else g * (s - 1)
        if fallback:
            vals.append(_j_quad(s, x))
            steps.append(0.0)
            lost.append(acc)
            continue
        t = x * vals[-1]
        v = g - t
        big = max(abs(g), abs(t))
        # shared leading bits, to within one bit, from binary exponents
        ratio = float(mpmath.mag(big) - mpmath.mag(v)) if v != 0 else float(mpmath.mp.prec)
        acc += max(ratio, 0.0)
        if method == "auto" and acc > budget:
            fallback = True
            vals.append(_j_quad(s, x))
            steps.append(ratio)
            lost.append(acc)
            continue
        vals.append(v)
        steps.append(ratio)
        lost.append(acc)
    return vals, steps, lost


def base_integral_J(s, x, *, method: str = "auto", precision: int = DEFAULT_PRECISION):
    """J(s, x) = ∫_0^∞ v^s e^{-v} / (x + v) dv for half-integer s ≥ -1/2 or integer s ≥ 0.

    ``method`` is "auto" (recursion with a quadrature fallback once the
    accumulated cancellation eats into the guard bits), "recursion" or "quad".
    """
    h = HalfInteger.of(s)
    if h.twice_value < -1:
        raise DomainError(f"J(s, x) needs s >= -1/2, got {h}")
    with mpmath.workprec(precision):
        if float(x) <= 0:
            raise DomainError("J(s, x) needs x > 0")
        vals, _, _ = j_chain(h.twice_value, x, h.twice_value % 2, method=method)
        return float(vals[-1])


def recursion_cancellation(s, x, precision: int = DEFAULT_PRECISION):
    """(max per-step shared bits, accumulated lost bits) of the recursion up to s."""
    h = HalfInteger.of(s)
    with mpmath.workprec(precision):
        _, steps, lost = j_chain(h.twice_value, x, h.twice_value % 2, method="recursion")
        return max(steps), lost[-1]


# ---------------------------------------------------------------- workspace


@dataclass
class KernelWorkspace:
    """Cached coefficients and transforms for one parameter pair.

    Not meant to be mutated by callers: the caches only memoize pure values.
    """

    params: EnsembleParams
    precision: int = DEFAULT_PRECISION
    quad_nodes: int = 40
    method: str = "auto"
    _coef: dict = field(default_factory=dict, repr=False)
    _jcache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        with mpmath.workprec(self.precision):
            for k in range(-2, self.params.m + 4):
                self._coeffs("p", k)
                self._coeffs("q", k)

    @property
    def m(self) -> int:
        return self.params.m

    def _coeffs(self, kind: str, k: int):
        key = (kind, k, mpmath.mp.prec)
        c = self._coef.get(key)
        if c is None:
            poly = (poly_p if kind == "p" else poly_q)(k, self.params)
            c = self._coef[key] = poly.mp_coeffs()
        return c

    def _J(self, x, nmax: int):
        """[J(α + j, x) for j = 0..nmax] at the current precision."""
        key = (x, mpmath.mp.prec)
        cached = self._jcache.get(key)
        if cached is not None and len(cached) > nmax:
            return cached
        a2 = self.params.alpha.twice_value
        vals, _, _ = j_chain(a2 + 2 * nmax, x, 1, method=self.method)
        # vals[i] is J((2i - 1)/2); α + j has twice-value a2 + 2j
        off = (a2 + 1) // 2
        out = vals[off : off + nmax + 1]
        if len(self._jcache) > 4096:
            self._jcache.clear()
        self._jcache[key] = out
        return out

    def p(self, k, x):
        return _horner(self._coeffs("p", k), x)

    def q(self, k, x):
        return _horner(self._coeffs("q", k), x)

    def P(self, k, x):
        """P_k(-x)."""
        c = self._coeffs("p", k)
        if not c:
            return mpmath.mpf(0)
        J = self._J(x, len(c))
        return -mpmath.fsum(ci * J[j] for j, ci in enumerate(c))

    def Q(self, k, x):
        """Q_k(-x)."""
        c = self._coeffs("q", k)
        if not c:
            return mpmath.mpf(0)
        J = self._J(x, len(c) + 1)
        return -mpmath.fsum(ci * J[j + 1] for j, ci in enumerate(c))

    def weight(self, x, y):
        a = mpq(self.params.a)
        return x**a * y ** (a + 1) * mpmath.exp(-x - y) / (x + y)

    def ctx(self):
        return mpmath.workprec(self.precision)


def _horner(c, x):
    acc = mpmath.mpf(0)
    for ci in reversed(c):
        acc = acc * x + ci
    return acc


def _pos(x, what="x"):
    x = mpmath.mpf(x)
    if x <= 0:
        raise DomainError(f"{what} must be positive for the Cauchy transforms")
    return x


def cauchy_P(k: int, x, ws: KernelWorkspace) -> float:
    """P_k(-x) for x > 0."""
    with ws.ctx():
        return float(ws.P(k, _pos(x)))


def cauchy_Q(k: int, x, ws: KernelWorkspace) -> float:
    """Q_k(-x) for x > 0."""
    with ws.ctx():
        return float(ws.Q(k, _pos(x)))


# ---------------------------------------------------------------- kernels


def _kernel_mp(which: str, x, y, ws: KernelWorkspace):
    m, a = ws.m, mpq(ws.params.a)
    if which == "K00":
        x, y = mpmath.mpf(x), mpmath.mpf(y)
        return mpmath.fsum(ws.p(k, x) * ws.q(k, y) for k in range(m))
    if which == "K01":
        x = _pos(x)
        y = mpmath.mpf(y)
        return -(x**a) * mpmath.exp(-x) * mpmath.fsum(ws.p(k, y) * ws.Q(k, x) for k in range(m))
    if which == "K10":
        x = mpmath.mpf(x)
        y = _pos(y, "y")
        return -(y ** (a + 1)) * mpmath.exp(-y) * mpmath.fsum(ws.P(k, y) * ws.q(k, x) for k in range(m))
    if which == "K11":
        x, y = _pos(x), _pos(y, "y")
        s = mpmath.fsum(ws.P(k, y) * ws.Q(k, x) for k in range(m))
        return x**a * y ** (a + 1) * mpmath.exp(-x - y) * s - ws.weight(x, y)
    raise ValueError(f"unknown kernel {which!r}")


def kernel_eval(which: str, x, y, ws: KernelWorkspace) -> float:
    with ws.ctx():
        return float(_kernel_mp(which, x, y, ws))


def _h1_mp(x, ws):
    return (_kernel_mp("K01", x, x, ws) + _kernel_mp("K10", x, x, ws)) / (2 * ws.m)


def density_h1(x, ws: KernelWorkspace) -> float:
    """One-point density of a single unconstrained eigenvalue."""
    with ws.ctx():
        return float(_h1_mp(x, ws))


# ---------------------------------------------------------------- Christoffel-Darboux


def cd_parts(which: str, x, y, ws: KernelWorkspace):
    """(lhs, rhs_terms) of a Christoffel-Darboux identity at x, y > 0.

    Capital letters in ``which`` mean the transform at the negative argument,
    so e.g. "Pq" is the identity with P_k(-x) q_k(y) and factor (y - x).
    """
    if which not in ("pq", "Pq", "pQ", "PQ"):
        raise ValueError(f"unknown CD identity {which!r}")
    m, params = ws.m, ws.params
    rho, sig = mpq(ratio_rho(m, params)), mpq(ratio_sigma(m, params))
    c = mpq(params.a + m + 1)
    x, y = mpmath.mpf(x), mpmath.mpf(y)
    if which[0] == "P":
        X, f = -_pos(x), lambda k: ws.P(k, x)
    else:
        X, f = x, lambda k: ws.p(k, x)
    if which[1] == "Q":
        Y, g = -_pos(y, "y"), lambda k: ws.Q(k, y)
    else:
        Y, g = y, lambda k: ws.q(k, y)
    lhs = (X + Y) * mpmath.fsum(f(k) * g(k) for k in range(m))
    fm1, f0, f1 = f(m - 1), f(m), f(m + 1)
    gm1, g0, g1 = g(m - 1), g(m), g(m + 1)
    A_ = rho * fm1 - sig * f1 + X * f0 - (c - sig + rho) * f0
    B_ = rho * gm1 - sig * g1 + Y * g0 - (c + sig - rho) * g0
    terms = [A_ * B_ / (2 * c), rho * f0 * gm1, rho * fm1 * g0]
    if which == "PQ":
        terms.append(mpmath.mpf(-1))
    return lhs, terms


def cd_residual(which: str, x, y, ws: KernelWorkspace) -> float:
    with ws.ctx():
        lhs, terms = cd_parts(which, x, y, ws)
        return relative_residual(lhs, terms)


# ---------------------------------------------------------------- Cauchy-side identities


def structure_residual_transform(kind: str, k: int, x, ws: KernelWorkspace) -> float:
    """Structure relation for P_k or Q_k at -x, derivative by 5-point differences."""
    params = ws.params
    with ws.ctx():
        rho, sig = mpq(ratio_rho(k, params)), mpq(ratio_sigma(k, params))
        x = _pos(x)
        F = (lambda kk, t: ws.P(kk, t)) if kind == "P" else (lambda kk, t: ws.Q(kk, t))
        # z d/dz F(z) at z = -x equals x d/dx of t -> F(-t) at t = x
        lhs = x * _five_point(lambda t: F(k, t), x)
        shift = 1 if kind == "P" else 0
        sgn = 1 if kind == "P" else -1
        terms = [
            rho * F(k - 1, x),
            -(shift - sgn * (sig - rho)) * F(k, x),
            -sig * F(k + 1, x),
        ]
        return relative_residual(lhs, terms)


def four_term_residual_transform(kind: str, k: int, x, ws: KernelWorkspace) -> float:
    from .biorth import r_coeffs, s_coeffs

    a = ws.params.a
    with ws.ctx():
        x = _pos(x)
        z = -x
        if kind == "P":
            f = {i: ws.P(k + i, x) for i in (-1, 0, 1, 2)}
            lhs = z * (f[1] - f[0])
            coeffs = r_coeffs(k, ws.params)
        elif kind == "Q":
            f = {i: ws.Q(k + i, x) for i in (-1, 0, 1, 2)}
            lhs = z * (f[1] / mpq(a + k + 2) - f[0] / mpq(a + k + 1))
            coeffs = s_coeffs(k, ws.params)
        else:
            raise ValueError(f"kind must be 'P' or 'Q', got {kind!r}")
        terms = [mpq(c) * f[i] for c, i in zip(coeffs, (2, 1, 0, -1))]
        return relative_residual(lhs, terms)


def single_sum_residual_transform(kind: str, x, ws: KernelWorkspace) -> float:
    """Closed forms of 2Σ(α+j+1)P_j + √2 and 2(α+m+1)(ΣQ_k + 1/√2) at -x."""
    m, a = ws.m, ws.params.a
    with ws.ctx():
        rho, sig = mpq(ratio_rho(m, ws.params)), mpq(ratio_sigma(m, ws.params))
        x = _pos(x)
        z = -x
        if kind == "P-hat":
            F, sgn = ws.P, 1
            lhs = mpmath.fsum(mpq(2 * (a + j + 1)) * F(j, x) for j in range(m)) + mpmath.sqrt(2)
        elif kind == "Q-check":
            F, sgn = ws.Q, -1
            lhs = mpq(2 * (a + m + 1)) * (mpmath.fsum(F(j, x) for j in range(m)) + 1 / mpmath.sqrt(2))
        else:
            raise ValueError(f"unknown identity {kind!r}")
        f = [F(m + i, x) for i in (-1, 0, 1)]
        terms = [rho * f[0], -sig * f[2], z * f[1], -(mpq(a + m + 1) - sgn * (sig - rho)) * f[1]]
        return relative_residual(lhs, terms)


# ---------------------------------------------------------------- kernel derivatives


def _five_point(F, x):
    h = max(mpmath.mpf("1e-5"), mpmath.mpf("1e-5") * x)
    return (-F(x + 2 * h) + 8 * F(x + h) - 8 * F(x - h) + F(x - 2 * h)) / (12 * h)


@lru_cache(maxsize=256)
def _raw_a_values(params: EnsembleParams):
    a, m = params.a, Fraction(params.m)
    fs = (A.a1, A.a2, A.a3, A.a4, A.a5)
    return limit_at(lambda t: tuple(f(t, m, 0) for f in fs), a)


def coeff_a_values(params: EnsembleParams):
    return tuple(_hooks.scale(f"a{i + 1}", v) for i, v in enumerate(_raw_a_values(params)))


def deriv_closed_terms(which: str, x, ws: KernelWorkspace):
    """Closed-form terms of d/dx[x K(x, x)] for K01, K10 or their sum."""
    m, params = ws.m, ws.params
    a = mpq(params.a)
    rho = mpq(ratio_rho(m, params))
    x = _pos(x)
    w = x**a * mpmath.exp(-x)
    if which == "K01":
        return [rho * w * ws.p(m, x) * ws.Q(m - 1, x), rho * w * ws.p(m - 1, x) * ws.Q(m, x)]
    if which == "K10":
        return [rho * w * x * ws.P(m, x) * ws.q(m - 1, x), rho * w * x * ws.P(m - 1, x) * ws.q(m, x)]
    if which == "onepoint":
        a1, a2, a3, a4, a5 = (mpq(v) for v in coeff_a_values(params))
        q = {i: ws.q(m + i, x) for i in (-2, -1, 0, 1)}
        Q = {i: ws.Q(m + i, x) for i in (-2, -1, 0, 1)}
        return [
            -w * a1 * q[-1] * Q[-2],
            w * a1 * q[-2] * Q[-1],
            -w * a2 * q[-1] * Q[0],
            w * a2 * q[0] * Q[-1],
            -w * a3 * q[1] * Q[0],
            w * a3 * q[0] * Q[1],
            w * x * a4 * q[-1] * Q[-1],
            w * x * a5 * q[0] * Q[0],
        ]
    raise ValueError(f"unknown derivative identity {which!r}")


def deriv_residual(which: str, x, ws: KernelWorkspace) -> float:
    """Finite-difference d/dx[x K(x,x)] against its closed form (relative)."""
    with ws.ctx():
        x = _pos(x)
        if which == "onepoint":
            F = lambda t: t * (_kernel_mp("K01", t, t, ws) + _kernel_mp("K10", t, t, ws))
        elif which in ("K01", "K10"):
            F = lambda t: t * _kernel_mp(which, t, t, ws)
        else:
            raise ValueError(f"unknown derivative identity {which!r}")
        num = _five_point(F, x)
        terms = deriv_closed_terms(which, x, ws)
        return relative_residual(num, terms)


# ---------------------------------------------------------------- 2D integrals


def _bivariate(ws: KernelWorkspace, fx, gy, ax: Fraction, by: Fraction, c: int, n: int):
    """∫∫ x^ax y^by (x+y)^(-c) e^{-x-y} fx(x) gy(y) dx dy in polar-simplex coordinates.

    With x = r u, y = r (1-u) the integrand splits into a generalized
    Laguerre weight in r and a Jacobi weight in u, exact for polynomials.
    """
    rule = gauss_laguerre(n, float(ax + by + 1 - c))
    u, wu = _jacobi01(n, float(ax), float(by))
    r = np.asarray(rule.nodes)
    wr = np.asarray(rule.weights)
    X = np.outer(r, u)
    Y = np.outer(r, 1 - u)
    vals = fx(X) * gy(Y)
    return float(wr @ vals @ wu)


def _bivariate_moments(ws: KernelWorkspace, pc, qc, ax: Fraction, by: Fraction, c: int):
    """Same integral for polynomial fx, gy given by coefficients, from the monomial moments

        ∫∫ x^A y^B (x+y)^(-c) e^{-x-y} = Γ(A+B+2-c) Γ(A+1) Γ(B+1) / Γ(A+B+2),

    summed at the workspace precision (the products cancel heavily in double).
    """
    with ws.ctx():
        A0, B0 = mpq(ax), mpq(by)
        total = mpmath.mpf(0)
        for i, pi in enumerate(pc):
            for j, qj in enumerate(qc):
                A, B = A0 + i, B0 + j
                total += pi * qj * mpmath.gamma(A + B + 2 - c) * mpmath.beta(A + 1, B + 1)
        return float(total)


def _np_poly(c):
    cf = np.array([float(v) for v in c])
    return lambda x: np.polynomial.polynomial.polyval(x, cf) if len(cf) else np.zeros_like(x)


def _float_coeffs(ws, kind, k):
    with ws.ctx():
        return ws._coeffs(kind, k)


def _bivariate_dispatch(ws, kind_x, i, kind_y, j, ax, by, c, method):
    if method == "moments":
        return _bivariate_moments(ws, _float_coeffs(ws, kind_x, i), _float_coeffs(ws, kind_y, j), ax, by, c)
    if method == "quadrature":
        fp = _np_poly(_float_coeffs(ws, kind_x, i))
        gq = _np_poly(_float_coeffs(ws, kind_y, j))
        n = max(ws.quad_nodes, (i + j) // 2 + 4)
        return _bivariate(ws, fp, gq, ax, by, c, n)
    raise ValueError("method must be 'moments' or 'quadrature'")


def weighted_inner(k: int, l: int, ws: KernelWorkspace, method: str = "moments") -> float:
    """∫∫ p_k(x) q_l(y) W(x, y) dx dy (biorthogonality gives δ_kl).

    ``method='quadrature'`` uses the double-precision tensor rule instead of
    high-precision monomial moments.
    """
    a = ws.params.a
    return _bivariate_dispatch(ws, "p", k, "q", l, a, a + 1, 1, method)


def square_weight_integral(i: int, j: int, weighted: str, ws: KernelWorkspace, method: str = "moments") -> float:
    """∫∫ x^α y^(α+1) e^{-x-y}/(x+y)^2 · [x p_i(x) q_j(y) | p_i(x) y q_j(y)]."""
    a = ws.params.a
    if weighted == "x":
        return _bivariate_dispatch(ws, "p", i, "q", j, a + 1, a + 1, 2, method)
    if weighted == "y":
        return _bivariate_dispatch(ws, "p", i, "q", j, a, a + 2, 2, method)
    raise ValueError("weighted must be 'x' or 'y'")


def square_weight_expected(i: int, j: int, weighted: str, params: EnsembleParams) -> Fraction:
    """Closed-form case table for :func:`square_weight_integral`."""
    rho, sig = ratio_rho(i, params), ratio_sigma(i, params)
    sgn = 1 if weighted == "x" else -1
    if j == i + 1:
        return -sgn * sig
    if j == i:
        return sgn * (sig - rho) + (1 if weighted == "y" else 0)
    if j == i - 1:
        return sgn * rho
    return Fraction(0)


# ---------------------------------------------------------------- 1D integrals


def sqrt_substitution_integral(f, *, frac_power: float = 0.0, x_max=120, nodes: int = 24):
    """∫_0^∞ f(x) dx for integrands analytic in √x up to a factor t^frac_power.

    With x = t², 2 t f(t²) is smooth on unit panels in t except possibly for
    a factor t^frac_power (0 < frac_power < 1), which Gauss-Jacobi absorbs on
    the first panel.  ``f`` takes an mpf and returns an mpf or a list of them.
    """
    t_max = mpmath.sqrt(x_max)
    panels = int(mpmath.ceil(t_max))
    edges = [t_max * i / panels for i in range(panels + 1)]
    xs, ws_ = _legendre(nodes)
    total = None

    def add(w, v):
        nonlocal total
        if isinstance(v, (list, tuple)):
            total = [w * vi for vi in v] if total is None else [a + w * vi for a, vi in zip(total, v)]
        else:
            total = w * v if total is None else total + w * v

    for i in range(panels):
        lo, hi = edges[i], edges[i + 1]
        half = (hi - lo) / 2
        if i == 0 and frac_power:
            tj, wj = _jacobi_first(nodes, frac_power)
            for s, w in zip(tj, wj):
                # weight (1+s)^fp on [-1, 1] is t^fp on [0, hi] up to half^fp
                t = half * (1 + mpmath.mpf(s))
                add(mpmath.mpf(w) * half ** (1 + frac_power) * 2 * t / t**frac_power, f(t * t))
            continue
        mid = (hi + lo) / 2
        for s, w in zip(xs, ws_):
            t = mid + half * mpmath.mpf(s)
            add(mpmath.mpf(w) * half * 2 * t, f(t * t))
    return total


@lru_cache(maxsize=None)
def _jacobi_first(n: int, fp: float):
    return roots_jacobi(n, 0.0, fp)


def _x_max(power: float) -> float:
    # e^{-x} x^power below 2^-140 relative
    x = 60.0
    for _ in range(50):
        x = 100.0 + power * float(np.log(max(x, 1.0)))
    return x


def density_moment(k: float, ws: KernelWorkspace) -> float:
    """∫ x^k h1(x) dx by the √x substitution."""
    with ws.ctx():
        fp = float((2 * k) % 1) if k != int(k) else 0.0
        f = lambda x: x**k * _h1_mp(x, ws)
        return float(sqrt_substitution_integral(f, frac_power=fp, x_max=_x_max(k + float(ws.params.a) + 2 * ws.m)))
