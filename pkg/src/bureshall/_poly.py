"""Small exact algebra helpers: polynomials in one variable and truncated
Laurent series used to take limits through removable singularities."""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest

_SCALARS = (int, Fraction)


class Poly:
    """Dense univariate polynomial with exact coefficients (lowest degree first)."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) if isinstance(x, int) else x for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def lift(cls, v):
        return v if isinstance(v, Poly) else cls((v,))

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def __add__(self, o):
        if not isinstance(o, (Poly,) + _SCALARS):
            return NotImplemented
        o = Poly.lift(o)
        return Poly(a + b for a, b in zip_longest(self.c, o.c, fillvalue=Fraction(0)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-a for a in self.c)

    def __sub__(self, o):
        if not isinstance(o, (Poly,) + _SCALARS):
            return NotImplemented
        return self + (-Poly.lift(o))

    def __rsub__(self, o):
        return Poly.lift(o) - self

    def __mul__(self, o):
        if isinstance(o, _SCALARS):
            return Poly(a * o for a in self.c)
        if not isinstance(o, Poly):
            return NotImplemented
        if not self.c or not o.c:
            return Poly()
        out = [Fraction(0)] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if isinstance(o, _SCALARS):
            return Poly(a / Fraction(o) for a in self.c)
        return NotImplemented

    def __pow__(self, n: int):
        out = Poly((1,))
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, o):
        return self.c == Poly.lift(o).c

    def __hash__(self):
        return hash(self.c)

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, _SCALARS) else 0
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def deriv(self) -> "Poly":
        return Poly(i * a for i, a in enumerate(self.c) if i)

    def __repr__(self):
        return f"Poly({list(self.c)})"


class UndeterminedLimit(ArithmeticError):
    """A series ran out of known terms before its leading term was found."""


class Germ:
    """Truncated Laurent series  Σ_{i ≥ val} c_i t^i  known modulo t^(val + len(c)).

    Built to evaluate a rational expression f(α₀ + t) when f has a removable
    singularity at α₀: arithmetic tracks how many terms remain trustworthy,
    and :meth:`limit` returns the constant term once the poles have cancelled.
    """

    __slots__ = ("val", "c")

    def __init__(self, val: int, coeffs):
        self.val = val
        self.c = [Fraction(x) for x in coeffs]

    @classmethod
    def variable(cls, center, order: int) -> "Germ":
        """α₀ + t, known to `order` terms."""
        c = [Fraction(center), Fraction(1)] + [Fraction(0)] * max(order - 2, 0)
        return cls(0, c[:order])

    @property
    def prec(self) -> int:
        return self.val + len(self.c)

    def _const(self, x) -> "Germ":
        # a scalar is exact; give it as many terms as this germ can use
        n = max(self.prec, 1)
        return Germ(0, [Fraction(x)] + [Fraction(0)] * (n - 1))

    def _coerce(self, o):
        if isinstance(o, Germ):
            return o
        if isinstance(o, _SCALARS):
            return self._const(o)
        return None

    def normalized(self) -> "Germ":
        i = 0
        while i < len(self.c) and self.c[i] == 0:
            i += 1
        return Germ(self.val + i, self.c[i:])

    def __add__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        v = min(self.val, o.val)
        p = min(self.prec, o.prec)
        out = [Fraction(0)] * max(p - v, 0)
        for g in (self, o):
            for i, a in enumerate(g.c):
                j = g.val + i - v
                if j < len(out):
                    out[j] += a
        return Germ(v, out)

    __radd__ = __add__

    def __neg__(self):
        return Germ(self.val, [-a for a in self.c])

    def __sub__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        if isinstance(o, _SCALARS):
            return Germ(self.val, [a * o for a in self.c])
        if not isinstance(o, Germ):
            return NotImplemented
        a, b = self.normalized(), o.normalized()
        v = a.val + b.val
        n = min(len(a.c), len(b.c))
        out = [Fraction(0)] * n
        for i in range(n):
            ai = a.c[i]
            if ai:
                for j in range(n - i):
                    out[i + j] += ai * b.c[j]
        return Germ(v, out)

    __rmul__ = __mul__

    def inverse(self) -> "Germ":
        a = self.normalized()
        if not a.c:
            raise UndeterminedLimit("series has no known nonzero term")
        n = len(a.c)
        inv = [Fraction(0)] * n
        inv[0] = 1 / a.c[0]
        for i in range(1, n):
            s = sum((a.c[j] * inv[i - j] for j in range(1, i + 1)), Fraction(0))
            inv[i] = -s / a.c[0]
        return Germ(-a.val, inv)

    def __truediv__(self, o):
        if isinstance(o, _SCALARS):
            if o == 0:
                raise ZeroDivisionError("Germ division by zero")
            return Germ(self.val, [a / Fraction(o) for a in self.c])
        if not isinstance(o, Germ):
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, o):
        return self._coerce(o) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return (self ** (-n)).inverse()
        out = self._const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, o):
        # comparisons against zero are used by callers to detect zero divisors
        if isinstance(o, _SCALARS):
            d = self - o
            return all(x == 0 for x in d.c)
        return NotImplemented

    __hash__ = None

    def limit(self) -> Fraction:
        """Constant term; raises if a pole survives or too few terms are known."""
        a = self.normalized()
        if not a.c:
            if a.prec > 0:
                return Fraction(0)
            raise UndeterminedLimit("not enough terms to determine the limit")
        if a.val < 0:
            raise ZeroDivisionError(f"pole of order {-a.val} does not cancel")
        return a.c[0] if a.val == 0 else Fraction(0)

    def __repr__(self):
        return f"Germ(val={self.val}, c={self.c[:4]}{'...' if len(self.c) > 4 else ''})"


def limit_at(fn, center, orders=(8, 24, 64)):
    """fn(center), or its limit fn(center + t) as t → 0 if direct evaluation divides by zero.

    ``fn`` must use ring operations only and may return a scalar or a tuple.
    """
    try:
        return fn(center)
    except ZeroDivisionError:
        pass
    for order in orders:
        try:
            v = fn(Germ.variable(center, order))
            if isinstance(v, tuple):
                return tuple(x.limit() if isinstance(x, Germ) else Fraction(x) for x in v)
            return v.limit() if isinstance(v, Germ) else Fraction(v)
        except UndeterminedLimit:
            continue
    raise UndeterminedLimit(f"limit at {center} needs more than {orders[-1]} terms")
