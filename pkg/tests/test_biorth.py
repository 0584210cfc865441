"""Biorthogonal polynomials, leading coefficients and polynomial-side identities."""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bureshall.biorth import (
    EnsembleParams,
    PrefactorClass,
    ScaledPolynomial,
    coeff_cd,
    four_term_residual_poly,
    leading_coeff_S,
    poly_p,
    poly_q,
    r_coeffs,
    ratio_rho,
    ratio_sigma,
    single_sum_residual,
    structure_residual_poly,
)
from bureshall.exact import DomainError, GammaQuotient, gamma_quotient

pairs = st.integers(1, 6).flatmap(lambda m: st.tuples(st.just(m), st.integers(m, m + 4)))


def sqrt2_over(gq: GammaQuotient) -> GammaQuotient:
    return GammaQuotient(Fraction(1), 0, 1) / gq


class TestEnsembleParams:
    def test_alpha_and_d(self):
        p = EnsembleParams(2, 3)
        assert p.a == Fraction(1, 2)
        assert p.d == 4

    def test_boundary(self):
        assert EnsembleParams(3, 3).boundary
        assert EnsembleParams(3, 3).a == Fraction(-1, 2)

    @pytest.mark.parametrize("m,n", [(0, 1), (3, 2)])
    def test_rejects(self, m, n):
        with pytest.raises(DomainError):
            EnsembleParams(m, n)

    @given(pairs)
    def test_d_positive(self, mn):
        assert EnsembleParams(*mn).d > 0


class TestPolynomials:
    def test_p0_constant(self):
        for n in (2, 3, 5):
            params = EnsembleParams(1, n)
            p0 = poly_p(0, params)
            assert p0.degree == 0
            assert p0.leading == sqrt2_over(gamma_quotient([params.a + 1], []))

    def test_p0_half(self):
        p0 = poly_p(0, EnsembleParams(1, 2))
        assert p0.prefactor_class is PrefactorClass.SQRT_2_OVER_PI
        assert p0.coeffs == (Fraction(2),)

    def test_q0_equals_p0(self):
        params = EnsembleParams(3, 5)
        assert poly_q(0, params) == poly_p(0, params)

    @given(pairs, st.integers(0, 7))
    def test_degree_and_class(self, mn, k):
        params = EnsembleParams(*mn)
        for poly in (poly_p(k, params), poly_q(k, params)):
            assert poly.degree == k
            assert poly.prefactor_class is PrefactorClass.SQRT_2_OVER_PI
            assert all(isinstance(c, Fraction) for c in poly.coeffs)

    def test_trailing_zeros_trimmed(self):
        poly = ScaledPolynomial((Fraction(1), Fraction(2), Fraction(0)))
        assert poly.degree == 1

    def test_negative_index_is_zero(self):
        assert poly_p(-1, EnsembleParams(2, 3)).degree == -1


class TestLeadingCoefficient:
    def test_S0(self):
        for m, n in [(1, 1), (2, 3), (3, 7)]:
            params = EnsembleParams(m, n)
            assert leading_coeff_S(0, params) == sqrt2_over(gamma_quotient([params.a + 1], []))

    @given(pairs, st.integers(0, 6))
    def test_matches_polynomials(self, mn, k):
        params = EnsembleParams(*mn)
        S = leading_coeff_S(k, params)
        assert S == poly_p(k, params).leading == poly_q(k, params).leading

    def test_S1_half(self):
        params = EnsembleParams(1, 2)
        assert leading_coeff_S(1, params) == poly_p(1, params).leading

    @given(pairs, st.integers(1, 6))
    def test_ratio(self, mn, k):
        params = EnsembleParams(*mn)
        S = [leading_coeff_S(j, params) for j in (k - 1, k)]
        assert S[0] / S[1] == GammaQuotient(ratio_rho(k, params))
        assert ratio_sigma(k - 1, params) == ratio_rho(k, params)

    def test_ratio_k2_half(self):
        params = EnsembleParams(1, 2)
        a = params.a
        assert ratio_rho(2, params) == 2 * (2 * a + 3) / (2 * (2 * a + 5))
        # r_{k,-1} of the four-term relation is S_{k-1}/S_k
        assert r_coeffs(2, params)[3] == ratio_rho(2, params)


class TestCoeffCD:
    @pytest.mark.parametrize("mn", [(1, 1), (2, 3), (3, 3), (4, 9), (6, 6)])
    def test_sum_rule(self, mn):
        params = EnsembleParams(*mn)
        for j in range(6):
            for k in range(6):
                assert coeff_cd("c", j, k, params) + coeff_cd("d", j, k, params) == 2 * (params.a + j + 1)

    def test_c_m_mminus1(self):
        params = EnsembleParams(3, 5)
        assert params.a == Fraction(3, 2)
        m = 3
        assert coeff_cd("c", m - 1, m, params) + ratio_rho(m, params) == 2 * (params.a + m)
        assert coeff_cd("c", m, m - 1, params) == ratio_sigma(m - 1, params)
        S = [leading_coeff_S(j, params) for j in (m - 1, m)]
        assert GammaQuotient(coeff_cd("c", m, m - 1, params)) == S[0] / S[1]

    def test_d_terminates(self):
        params = EnsembleParams(4, 6)
        m = 4
        for j in range(m - 1):
            # d_{m,j} is stored at (row, col) = (j, m)
            assert coeff_cd("d", j, m, params) == 0
        assert coeff_cd("d", m - 1, m, params) != 0

    def test_out_of_band_c_is_zero(self):
        assert coeff_cd("c", 5, 2, EnsembleParams(2, 3)) == 0

    def test_expansion_of_x_pk(self):
        # x p_k = Σ_j c_{j,k} p_j, compared coefficient-wise
        params = EnsembleParams(3, 4)
        for k in range(5):
            lhs = (Fraction(0),) + poly_p(k, params).coeffs
            rhs = [Fraction(0)] * (k + 2)
            for j in range(k + 2):
                for i, c in enumerate(poly_p(j, params).coeffs):
                    rhs[i] += coeff_cd("c", j, k, params) * c
            assert list(lhs) == rhs

    def test_negative_index(self):
        with pytest.raises(DomainError):
            coeff_cd("c", -1, 0, EnsembleParams(2, 3))


class TestResiduals:
    def test_structure_examples(self):
        assert structure_residual_poly("p", 2, 1.0, EnsembleParams(4, 5)) < 1e-10
        assert structure_residual_poly("q", 3, 7.5, EnsembleParams(4, 5)) < 1e-10

    def test_structure_at_zero(self):
        params = EnsembleParams(3, 4)
        for kind in ("p", "q"):
            for k in range(4):
                assert structure_residual_poly(kind, k, 0, params) < 1e-30

    def test_four_term_examples(self):
        assert four_term_residual_poly("p", 1, 2.0, EnsembleParams(5, 6)) < 1e-10
        assert four_term_residual_poly("q", 2, 0.3, EnsembleParams(5, 6)) < 1e-10

    def test_single_sum_examples(self):
        assert single_sum_residual("p-hat", 1.0, EnsembleParams(3, 4)) < 1e-10
        assert single_sum_residual("q-check", 10.0, EnsembleParams(2, 5)) < 1e-10

    def test_pq_check_m1(self):
        params = EnsembleParams(1, 3)
        assert poly_p(0, params) == poly_q(0, params)
        assert single_sum_residual("pq-check", 0.7, params) == 0.0

    @settings(max_examples=60, deadline=None)
    @given(pairs, st.integers(0, 6), st.floats(0.01, 30.0))
    def test_all_kinds_small(self, mn, k, x):
        params = EnsembleParams(*mn)
        for kind in ("p", "q"):
            assert structure_residual_poly(kind, k, x, params) < 1e-9
            assert four_term_residual_poly(kind, k, x, params) < 1e-9
        for kind in ("p-hat", "q-check", "pq-check"):
            assert single_sum_residual(kind, x, params) < 1e-9

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            structure_residual_poly("r", 1, 1.0, EnsembleParams(2, 3))


def test_mp_evaluation_matches_exact():
    params = EnsembleParams(2, 3)
    p = poly_p(2, params)
    with mpmath.workprec(128):
        exact = sum(c * Fraction(3) ** j for j, c in enumerate(p.coeffs))
        assert abs(p(mpmath.mpf(3)) / p.prefactor_mpf() - mpmath.mpf(exact.numerator) / exact.denominator) < 1e-30
