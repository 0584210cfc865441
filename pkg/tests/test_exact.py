"""Exact scalar substrate: half-integers, digamma values, Gamma quotients."""

from fractions import Fraction
from math import factorial

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bureshall.exact import (
    DigammaNumber,
    DomainError,
    GammaQuotient,
    HalfInteger,
    digamma_exact,
    format_rational,
    gamma_exact,
    gamma_quotient,
    to_float,
)

half_integers = st.integers(min_value=1, max_value=200).map(lambda t: Fraction(t, 2))
rationals = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
digamma_numbers = st.builds(DigammaNumber, rationals, rationals, rationals)


class TestDigamma:
    def test_psi_one(self):
        assert digamma_exact(1) == DigammaNumber(0, -1, 0)

    def test_psi_half(self):
        assert digamma_exact(Fraction(1, 2)) == DigammaNumber(0, -1, -2)

    def test_psi_seven_halves(self):
        # 2 (1 + 1/3 + 1/5) = 46/15
        assert digamma_exact(Fraction(7, 2)) == DigammaNumber(Fraction(46, 15), -1, -2)

    @pytest.mark.parametrize("x", ["1", "2", "5", "1/2", "7/2", "21/2", "40"])
    def test_matches_mpmath(self, x):
        with mpmath.workprec(128):
            assert abs(digamma_exact(Fraction(x)).to_mpf() - mpmath.digamma(mpmath.mpf(Fraction(x).numerator) / Fraction(x).denominator)) < mpmath.mpf(2) ** -120

    @pytest.mark.parametrize("bad", [0, -1, Fraction(-1, 2), Fraction(1, 3)])
    def test_domain(self, bad):
        with pytest.raises(DomainError):
            digamma_exact(bad)

    @settings(max_examples=200, deadline=None)
    @given(half_integers)
    def test_recurrence_exact(self, x):
        assert digamma_exact(x + 1) - digamma_exact(x) == DigammaNumber(1 / x)


class TestDigammaField:
    @given(digamma_numbers, digamma_numbers, digamma_numbers)
    def test_addition_associative_commutative(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a

    @given(digamma_numbers, rationals)
    def test_scaling_distributes(self, a, q):
        assert (a + a) * q == a * q + a * q

    def test_gamma_free_difference(self):
        d = digamma_exact(5) - digamma_exact(Fraction(7, 2))
        assert d == DigammaNumber(Fraction(-59, 60), 0, 2)
        assert to_float(d) == pytest.approx(0.402961, abs=5e-7)
        assert to_float(d) == pytest.approx(float(mpmath.digamma(5) - mpmath.digamma(3.5)), rel=1e-15)

    def test_product_of_transcendentals_refused(self):
        with pytest.raises(TypeError):
            digamma_exact(1) * digamma_exact(2)

    def test_str(self):
        assert str(DigammaNumber(Fraction(-59, 60), 0, 2)) == "-59/60 + 2*ln2"
        assert str(DigammaNumber()) == "0"


class TestGammaQuotient:
    def test_factorial_ratio(self):
        assert gamma_quotient([3], [2]) == GammaQuotient(Fraction(2))

    def test_sqrt_pi_over_two(self):
        g = gamma_quotient([Fraction(3, 2)], [1])
        assert g == GammaQuotient(Fraction(1, 2), 1, 0)
        assert to_float(g) == pytest.approx(0.8862269254527580, rel=1e-15)

    def test_half_integer_ratio(self):
        assert gamma_quotient([Fraction(7, 2)], [Fraction(3, 2)]) == GammaQuotient(Fraction(15, 4))

    @given(half_integers)
    def test_shift_by_one(self, x):
        assert gamma_quotient([x + 1], [x]) == GammaQuotient(x)

    @given(st.integers(1, 30))
    def test_integer_gamma(self, n):
        assert gamma_exact(n) == GammaQuotient(Fraction(factorial(n - 1)))

    def test_sqrt2_canonical(self):
        assert GammaQuotient(Fraction(3), 0, 4) == GammaQuotient(Fraction(12), 0, 0)
        assert GammaQuotient(Fraction(3), 0, 3).sqrt2_power == 1

    @pytest.mark.parametrize("bad", [0, Fraction(-1, 2)])
    def test_domain(self, bad):
        with pytest.raises(DomainError):
            gamma_quotient([bad], [])


class TestHalfInteger:
    def test_parity(self):
        assert HalfInteger.of(3).is_integer
        assert not HalfInteger.of(Fraction(3, 2)).is_integer
        assert HalfInteger.of("5/2").twice_value == 5

    def test_rejects_thirds(self):
        with pytest.raises(DomainError):
            HalfInteger.of(Fraction(1, 3))


def test_to_float_rational():
    assert to_float(Fraction(7, 8)) == 0.875


def test_format_rational():
    assert format_rational(Fraction(3, 4)) == "3/4"
    assert format_rational(Fraction(-6, 2)) == "-3"
