"""Coefficient polynomials, exact moment recurrences, entropy and purity."""

from fractions import Fraction
from math import prod

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bureshall import _appendix as A
from bureshall import _hooks
from bureshall.biorth import EnsembleParams
from bureshall.exact import DigammaNumber, DomainError, digamma_exact
from bureshall.kernels import KernelWorkspace
from bureshall.moments import (
    InvariantViolation,
    MomentChain,
    Parity,
    PoleError,
    TMoment,
    ValidityError,
    coeff_a,
    coeff_b,
    coeff_c,
    coeff_g,
    coeff_g_prime,
    coefficient_polynomial,
    g1_vanishing_factor,
    mean_entropy,
    mean_purity,
    moment_chain,
    moment_R,
    moment_R_real,
    moment_R_real_chain,
    moment_T,
    seed_R,
    seed_T,
    verify_intid,
    verify_rklast,
)

grid = st.integers(1, 8).flatmap(lambda m: st.tuples(st.just(m), st.integers(m, m + 4)))
interior = st.integers(1, 8).flatmap(lambda m: st.tuples(st.just(m), st.integers(m + 1, m + 4)))


def params_of(mn):
    return EnsembleParams(*mn)


class TestCoefficientPolynomials:
    def test_g1_at_minus_one(self):
        assert coeff_g(1, -1, EnsembleParams(2, 3)) == 5670

    @given(grid)
    def test_g1_minus_one_factorized(self, mn):
        p = params_of(mn)
        a, m = p.a, p.m
        assert coeff_g(1, -1, p) == 96 * (a + m - 1) * (a + m) * (a + m + 1) * (a + m + 2)

    @settings(max_examples=50, deadline=None)
    @given(grid)
    def test_specializations(self, mn):
        p = params_of(mn)
        a, m = p.a, Fraction(p.m)
        for i, f0, f1, fp in [
            (1, A.g1_at_0, A.g1_at_m1, A.g1p_at_m1),
            (2, A.g2_at_0, A.g2_at_m1, A.g2p_at_m1),
            (3, A.g3_at_0, A.g3_at_m1, A.g3p_at_m1),
        ]:
            assert coeff_g(i, 0, p) == f0(a, m, 0)
            assert coeff_g(i, -1, p) == f1(a, m, 0)
            assert coeff_g_prime(i, -1, p) == fp(a, m, 0)

    def test_primes_on_boundary(self):
        p = EnsembleParams(3, 3)
        a, m = p.a, Fraction(3)
        assert [coeff_g_prime(i, -1, p) for i in (1, 2, 3)] == [
            A.g1p_at_m1(a, m, 0), A.g2p_at_m1(a, m, 0), A.g3p_at_m1(a, m, 0)
        ]

    @pytest.mark.parametrize("name", ["g1", "g2", "g3", "b1_num", "c2_den"])
    def test_derivative_drops_degree(self, name):
        poly = coefficient_polynomial(name, EnsembleParams(3, 5))
        assert poly.deriv().degree == poly.degree - 1
        assert isinstance(poly(Fraction(7, 3)), Fraction)

    @given(grid, st.fractions(max_denominator=9).filter(lambda q: abs(q) < 20))
    def test_derivative_matches_difference_quotient(self, mn, k):
        # g_i is a polynomial, so a symmetric quotient with step h has error O(h^2) exactly
        p = params_of(mn)
        h = Fraction(1, 10**6)
        for i in (1, 2, 3):
            dq = (coeff_g(i, k + h, p) - coeff_g(i, k - h, p)) / (2 * h)
            assert abs(dq - coeff_g_prime(i, k, p)) < Fraction(1, 10**3) * (1 + abs(dq))

    def test_g1_root(self):
        p = EnsembleParams(2, 3)
        assert g1_vanishing_factor(2 * p.n, p) is not None
        assert coeff_g(1, 2 * p.n, p) == 0
        assert g1_vanishing_factor(1, p) is None

    @pytest.mark.parametrize("m", range(1, 7))
    def test_a4_over_a5(self, m):
        for n in (m, m + 1, m + 3):
            p = EnsembleParams(m, n)
            assert coeff_a(4, p) / coeff_a(5, p) == (p.a + m + 1) / (p.a + m)

    def test_a1_vanishes_at_m1(self):
        for n in (1, 2, 5):
            assert coeff_a(1, EnsembleParams(1, n)) == 0

    def test_b1_vanishes_at_k1(self):
        for mn in [(2, 3), (3, 3), (4, 7)]:
            assert coeff_b(1, 1, params_of(mn)) == 0

    def test_pole_names_factor(self):
        with pytest.raises(PoleError, match=r"\(k - 1\)"):
            coeff_c(1, 1, EnsembleParams(2, 3))
        with pytest.raises(PoleError, match="factor k vanishes"):
            coeff_c(2, 0, EnsembleParams(2, 3))

    def test_bad_index(self):
        with pytest.raises(ValueError):
            coeff_g(4, 0, EnsembleParams(2, 3))


class TestSeeds:
    def test_R0(self):
        assert seed_R(0, EnsembleParams(3, 5)) == 3

    def test_R1(self):
        assert seed_R(1, EnsembleParams(2, 3)) == 4

    def test_R_minus1_gamma_oracle(self):
        # m = 1: E[x^-1] under Gamma(α+1) is Γ(α)/Γ(α+1) = 1/α
        p = EnsembleParams(1, 2)
        assert seed_R(-1, p) == 2 == 1 / p.a

    @pytest.mark.parametrize("n", [4, 5, 7])
    def test_negative_seeds_m1(self, n):
        p = EnsembleParams(1, n)
        a = p.a
        assert seed_R(-2, p) == 1 / (a * (a - 1))
        assert seed_R(-3, p) == 1 / (a * (a - 1) * (a - 2))

    def test_boundary_refused(self):
        with pytest.raises(ValidityError, match="quadrature"):
            seed_R(-1, EnsembleParams(2, 2))

    def test_R_minus2_pole(self):
        with pytest.raises(PoleError):
            seed_R(-2, EnsembleParams(2, 2), continued=True)

    def test_no_seed(self):
        with pytest.raises(ValueError):
            seed_R(5, EnsembleParams(2, 3))


class TestMomentR:
    def test_examples(self):
        assert moment_R(2, EnsembleParams(2, 3)) == 15
        assert moment_R(4, EnsembleParams(1, 2)) == Fraction(945, 16)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_m1_oracle(self, n):
        p = EnsembleParams(1, n)
        for k in range(1, 9):
            assert moment_R(k, p) == prod(p.a + j for j in range(1, k + 1))

    def test_m1_downward(self):
        p = EnsembleParams(1, 6)
        a = p.a
        assert moment_R(-4, p) == 1 / (a * (a - 1) * (a - 2) * (a - 3))
        assert moment_R(-5, p) == 1 / (a * (a - 1) * (a - 2) * (a - 3) * (a - 4))

    @settings(max_examples=80, deadline=None)
    @given(grid, st.integers(-1, 3))
    def test_closure(self, mn, k):
        p = params_of(mn)
        try:
            r = [moment_R(j, p) for j in (k + 2, k, k - 2)]
        except ValidityError:
            return
        assert coeff_g(1, k, p) * r[0] - coeff_g(2, k, p) * r[1] - coeff_g(3, k, p) * r[2] == 0

    @settings(max_examples=40, deadline=None)
    @given(grid, st.integers(3, 12))
    def test_closure_high(self, mn, k):
        p = params_of(mn)
        lhs = coeff_g(1, k, p) * moment_R(k + 2, p)
        assert lhs == coeff_g(2, k, p) * moment_R(k, p) + coeff_g(3, k, p) * moment_R(k - 2, p)

    def test_odd_chain_on_boundary(self):
        # exact R_3 at α = -1/2 because g3(1) = 0
        p = EnsembleParams(2, 2)
        assert coeff_g(3, 1, p) == 0
        assert moment_R(3, p) == Fraction(39, 2)

    def test_negative_boundary_refused(self):
        with pytest.raises(ValidityError):
            moment_R(-1, EnsembleParams(2, 2))

    def test_type(self):
        with pytest.raises(TypeError):
            moment_R(1.5, EnsembleParams(2, 3))

    def test_chain(self):
        p = EnsembleParams(3, 4)
        ch = moment_chain(p, "odd", 9, k_min=1)
        assert isinstance(ch, MomentChain)
        assert ch.parity is Parity.ODD
        assert sorted(ch.values) == [1, 3, 5, 7, 9]
        for k in (3, 5, 7):
            assert ch.closure_residual(k) == 0


class TestMomentT:
    @pytest.mark.parametrize("mn", [(1, 1), (1, 3), (2, 3), (3, 4), (4, 8)])
    def test_T1_closed(self, mn):
        p = params_of(mn)
        a, m = p.a, p.m
        expected = digamma_exact(a + m + 1) * (Fraction(m) * (2 * a + m + 1) / 2)
        assert moment_T(1, p, continued=p.boundary).value == expected

    def test_T1_boundary_continued(self):
        p = EnsembleParams(2, 2)
        expected = digamma_exact(p.a + 3) * (2 * (2 * p.a + 3) / Fraction(2))
        assert moment_T(1, p, continued=True).value == expected

    def test_T0_m1(self):
        # E[ln x] for Gamma(α+1) is ψ(α+1)
        p = EnsembleParams(1, 3)
        assert moment_T(0, p).value == digamma_exact(p.a + 1)

    def test_T_seed_consistency(self):
        p = EnsembleParams(2, 3)
        assert seed_T(1, p) == moment_T(1, p)

    def test_m1_higher(self):
        # E[x^k ln x] = Γ(α+k+1)/Γ(α+1) ψ(α+k+1)
        p = EnsembleParams(1, 4)
        a = p.a
        for k in (2, 3, 4):
            r = prod(a + j for j in range(1, k + 1))
            assert moment_T(k, p).value == digamma_exact(a + k + 1) * r

    def test_even_boundary_refused(self):
        with pytest.raises(ValidityError, match="pole"):
            moment_T(2, EnsembleParams(2, 2))

    def test_odd_boundary_needs_flag(self):
        with pytest.raises(ValidityError, match="continued"):
            moment_T(1, EnsembleParams(3, 3))

    def test_low_k(self):
        with pytest.raises(ValidityError):
            moment_T(-4, EnsembleParams(2, 5))

    def test_tmoment_float(self):
        t = moment_T(1, EnsembleParams(2, 3))
        assert isinstance(t, TMoment)
        assert float(t) == pytest.approx(4 * float(mpmath.digamma(3.5)), rel=1e-15)


class TestEntropyPurity:
    def test_purity_examples(self):
        assert mean_purity(EnsembleParams(2, 3)) == Fraction(3, 4)
        assert mean_purity(EnsembleParams(2, 2)) == Fraction(7, 8)
        for n in range(1, 6):
            assert mean_purity(EnsembleParams(1, n)) == 1

    def test_entropy_examples(self):
        assert mean_entropy(EnsembleParams(2, 3)) == DigammaNumber(Fraction(-59, 60), 0, 2)
        assert mean_entropy(EnsembleParams(2, 2)) == DigammaNumber(Fraction(-7, 6), 0, 2)
        for n in range(1, 6):
            assert mean_entropy(EnsembleParams(1, n)) == DigammaNumber()

    def test_entropy_float_oracle(self):
        for m, n in [(2, 3), (3, 5), (4, 4)]:
            ref = mpmath.digamma(m * n - m * m / 2 + 1) - mpmath.digamma(n + 0.5)
            assert float(mean_entropy(EnsembleParams(m, n)).to_mpf()) == pytest.approx(float(ref), rel=1e-14)

    @settings(max_examples=60, deadline=None)
    @given(grid)
    def test_purity_in_range(self, mn):
        p = params_of(mn)
        v = mean_purity(p)
        assert Fraction(1, p.m) <= v <= 1

    @settings(max_examples=60, deadline=None)
    @given(grid)
    def test_entropy_gamma_free(self, mn):
        p = params_of(mn)
        s = mean_entropy(p)
        assert s.gamma_coeff == 0
        t1 = moment_T(1, p, continued=p.boundary).value
        assert (digamma_exact(p.d + 1) - t1 / p.d).gamma_coeff == 0

    def test_entropy_bounded_by_log_m(self):
        for m in range(2, 6):
            for n in range(m, m + 4):
                v = float(mean_entropy(EnsembleParams(m, n)).to_mpf())
                assert 0 < v < float(mpmath.log(m))

    def test_perturbation_detected(self):
        with _hooks.perturbed("g2"):
            with pytest.raises(InvariantViolation):
                mean_purity(EnsembleParams(3, 5))
        assert mean_purity(EnsembleParams(3, 5)) > 0


class TestRealK:
    def test_integer_matches_exact(self):
        assert moment_R_real(1.0, EnsembleParams(2, 3)) == pytest.approx(4.0, rel=1e-7)
        p = EnsembleParams(3, 4)
        assert moment_R_real(2.0, p) == pytest.approx(float(moment_R(2, p)), rel=1e-7)

    def test_boundary_odd(self):
        assert moment_R_real(3.0, EnsembleParams(2, 2)) == pytest.approx(19.5, rel=1e-7)

    def test_negative_m1(self):
        # m = 1: Γ(α+1+k)/Γ(α+1)
        p = EnsembleParams(1, 3)
        k = -0.7
        ref = mpmath.gamma(2.5 + k) / mpmath.gamma(2.5)
        assert moment_R_real(k, p) == pytest.approx(float(ref), rel=1e-7)

    def test_chain(self):
        p = EnsembleParams(2, 4)
        assert moment_R_real_chain(0.5, 4.5, p) == pytest.approx(moment_R_real(4.5, p), rel=1e-7)

    def test_domain(self):
        with pytest.raises(DomainError):
            moment_R_real(-1.5, EnsembleParams(2, 3))


class TestIntegralIdentities:
    @pytest.mark.parametrize("k,mn", [(1, (2, 4)), (3, (3, 4)), (2, (2, 2))])
    def test_examples(self, k, mn):
        p = params_of(mn)
        ws = KernelWorkspace(p)
        assert verify_rklast(k, p, ws) < 1e-6
        assert verify_intid(k, p, ws) < 1e-6

    def test_real_k(self):
        p = EnsembleParams(3, 5)
        assert verify_rklast(1.75, p) < 1e-6
        assert verify_intid(2.5, p) < 1e-6

    def test_perturbed_b1_detected(self):
        p = EnsembleParams(2, 4)
        assert verify_rklast(2, p) < 1e-12
        with _hooks.perturbed("b1"):
            assert verify_rklast(2, p) > 1e-8


def test_perturbation_does_not_leak_into_cache():
    p = EnsembleParams(2, 7)
    with _hooks.perturbed("g2"):
        moment_R(6, p)
    assert moment_R(6, p) == _replay_even_chain(6, p)


def _replay_even_chain(k, p):
    # independent recomputation from the unperturbed coefficients
    r = {0: seed_R(0, p), 2: seed_R(2, p)}
    for j in range(2, k, 2):
        r[j + 2] = (coeff_g(2, j, p) * r[j] + coeff_g(3, j, p) * r[j - 2]) / coeff_g(1, j, p)
    return r[k]
