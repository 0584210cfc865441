"""Cauchy transforms, kernels, density and the kernel-side identities."""

from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from bureshall.biorth import EnsembleParams, ratio_sigma
from bureshall.exact import DomainError
from bureshall.kernels import (
    STEP_CANCEL_BITS,
    KernelWorkspace,
    QuadratureKind,
    base_integral_J,
    cauchy_P,
    cauchy_Q,
    cd_parts,
    cd_residual,
    density_h1,
    density_moment,
    deriv_residual,
    four_term_residual_transform,
    gauss_laguerre,
    j_chain,
    kernel_eval,
    recursion_cancellation,
    single_sum_residual_transform,
    square_weight_expected,
    square_weight_integral,
    structure_residual_transform,
    weighted_inner,
)

_WS = {}


def ws_for(m, n):
    key = (m, n)
    if key not in _WS:
        _WS[key] = KernelWorkspace(EnsembleParams(m, n))
    return _WS[key]


def J_direct(s, x):
    f = lambda v: v**s * np.exp(-v) / (x + v)
    return integrate.quad(f, 0, np.inf, epsabs=0, epsrel=1e-13, limit=200)[0]


class TestBaseIntegral:
    def test_J0(self):
        assert base_integral_J(0, 1.0) == pytest.approx(0.596347362323194, rel=1e-14)
        assert base_integral_J(0, 1.0) == pytest.approx(J_direct(0, 1.0), rel=1e-12)

    def test_J1(self):
        assert base_integral_J(1, 1.0) == pytest.approx(1 - base_integral_J(0, 1.0), rel=1e-15)
        assert base_integral_J(1, 1.0) == pytest.approx(0.403652637676806, rel=1e-14)
        assert base_integral_J(1, 1.0, method="quad") == pytest.approx(base_integral_J(1, 1.0), rel=1e-14)

    def test_J_minus_half(self):
        v = base_integral_J(Fraction(-1, 2), 1.0)
        assert v == pytest.approx(float(mpmath.pi * mpmath.e * mpmath.erfc(1)), rel=1e-15)
        assert v == pytest.approx(1.343293, abs=1e-6)

    @pytest.mark.parametrize("x", [0.0, -1.0])
    def test_domain(self, x):
        with pytest.raises(DomainError):
            base_integral_J(1, x)

    def test_domain_s(self):
        with pytest.raises(DomainError):
            base_integral_J(Fraction(-3, 2), 1.0)

    @settings(max_examples=40, deadline=None)
    @given(
        st.integers(1, 6).flatmap(lambda m: st.tuples(st.just(m), st.integers(m, m + 4))),
        st.floats(1e-3, 50.0),
        st.data(),
    )
    def test_recursion_matches_quadrature(self, mn, x, data):
        params = EnsembleParams(*mn)
        top = params.alpha.twice_value + 2 * (mn[0] + 3)
        s2 = data.draw(st.integers(-1, top))
        rec = base_integral_J(Fraction(s2, 2), x, method="recursion")
        quad = base_integral_J(Fraction(s2, 2), x, method="quad")
        assert rec == pytest.approx(quad, rel=1e-10)

    def test_instability_detector(self):
        flagged = 0
        for x in (30.0, 1e3, 1e4, 1e5):
            for s in (Fraction(21, 2), 15, 20):
                steps, _ = recursion_cancellation(s, x)
                if steps <= STEP_CANCEL_BITS:
                    continue
                flagged += 1
                auto = base_integral_J(s, x)
                quad = base_integral_J(s, x, method="quad")
                assert auto == pytest.approx(quad, rel=1e-9)
        assert flagged >= 6

    def test_chain_reports_losses(self):
        with mpmath.workprec(128):
            vals, steps, lost = j_chain(9, mpmath.mpf(40), 1)
        assert len(vals) == len(steps) == len(lost) == 6
        assert lost == sorted(lost)


class TestQuadratureRule:
    @pytest.mark.parametrize("order", [-0.5, 0.5, 2.5])
    def test_laguerre_exactness(self, order):
        n = 12
        rule = gauss_laguerre(n, order)
        assert rule.kind is QuadratureKind.GAUSS_LAGUERRE
        assert all(w > 0 for w in rule.weights)
        for j in range(2 * n):
            got = sum(w * x**j for x, w in zip(rule.nodes, rule.weights))
            assert got == pytest.approx(float(mpmath.gamma(order + j + 1)), rel=1e-11)


class TestTransforms:
    def test_P0_half(self):
        params = EnsembleParams(1, 2)
        ws = ws_for(1, 2)
        expected = -np.sqrt(2) / float(mpmath.gamma(1.5)) * J_direct(0.5, 1.0)
        assert cauchy_P(0, 1.0, ws) == pytest.approx(expected, rel=1e-10)
        assert params.a == Fraction(1, 2)

    def test_Q_against_definition(self):
        ws = ws_for(2, 3)
        from bureshall.biorth import poly_q

        q = poly_q(2, ws.params)
        with mpmath.workprec(128):
            f = lambda w: -(w**1.5) * mpmath.exp(-w) * q(w) / (mpmath.mpf("0.8") + w)
            direct = mpmath.quad(f, [0, 1, 10, mpmath.inf])
        assert cauchy_Q(2, 0.8, ws) == pytest.approx(float(direct), rel=1e-12)

    def test_structure_transform(self):
        ws = ws_for(3, 4)
        for kind in ("P", "Q"):
            for x in (0.4, 2.0, 9.0):
                assert structure_residual_transform(kind, 3, x, ws) < 1e-8

    def test_four_term_transform(self):
        ws = ws_for(3, 4)
        assert four_term_residual_transform("P", 3, 2.0, ws) < 1e-8
        assert four_term_residual_transform("Q", 3, 2.0, ws) < 1e-8

    def test_single_sum_transform(self):
        ws = ws_for(4, 4)
        for kind in ("P-hat", "Q-check"):
            assert single_sum_residual_transform(kind, 1.7, ws) < 1e-8

    def test_domain(self):
        with pytest.raises(DomainError):
            cauchy_P(0, -1.0, ws_for(1, 2))


class TestKernels:
    def test_K00_definition(self):
        ws = ws_for(3, 4)
        with mpmath.workprec(128):
            direct = sum(ws.p(k, mpmath.mpf(1.2)) * ws.q(k, mpmath.mpf(0.4)) for k in range(3))
        assert kernel_eval("K00", 1.2, 0.4, ws) == pytest.approx(float(direct), rel=1e-14)

    def test_K00_at_origin(self):
        assert np.isfinite(kernel_eval("K00", 0.0, 0.0, ws_for(2, 3)))

    def test_K11_subtracts_weight(self):
        ws = ws_for(2, 4)
        x, y = 1.1, 2.3
        with mpmath.workprec(128):
            s = sum(ws.P(k, mpmath.mpf(y)) * ws.Q(k, mpmath.mpf(x)) for k in range(2))
            a = mpmath.mpf(float(ws.params.a))
            full = x**a * y ** (a + 1) * mpmath.exp(-x - y) * s
        assert kernel_eval("K11", x, y, ws) == pytest.approx(float(full - ws.weight(mpmath.mpf(x), mpmath.mpf(y))), rel=1e-12)

    def test_m1_density_is_gamma(self):
        # a single eigenvalue is Gamma(α+1) distributed
        for n in (1, 2, 4):
            ws = ws_for(1, n)
            a = float(ws.params.a)
            for x in (0.3, 1.0, 4.0):
                assert density_h1(x, ws) == pytest.approx(x**a * np.exp(-x) / float(mpmath.gamma(a + 1)), rel=1e-12)

    def test_unknown(self):
        with pytest.raises(ValueError):
            kernel_eval("K22", 1.0, 1.0, ws_for(2, 3))

    def test_density_nonnegative(self):
        for m, n in [(2, 2), (3, 5), (5, 6)]:
            ws = ws_for(m, n)
            for x in np.geomspace(1e-3, 60, 80):
                assert density_h1(x, ws) >= -1e-12


class TestDensityMoments:
    @pytest.mark.parametrize("mn", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 6), (4, 4)])
    def test_normalization_and_mean(self, mn):
        ws = ws_for(*mn)
        a, m = ws.params.a, ws.params.m
        assert density_moment(0, ws) == pytest.approx(1.0, abs=1e-8)
        assert density_moment(1, ws) == pytest.approx(float(2 * a + m + 1) / 2, abs=1e-8)

    def test_mean_23(self):
        assert density_moment(1, ws_for(2, 3)) == pytest.approx(2.0, abs=1e-8)


class TestChristoffelDarboux:
    def test_pq_example(self):
        assert cd_residual("pq", 1.3, 0.7, ws_for(4, 6)) < 1e-9

    def test_PQ_boundary(self):
        assert cd_residual("PQ", 5.0, 5.0, ws_for(2, 2)) < 1e-8

    def test_pq_m1_by_hand(self):
        # m = 1: (x+y) p0 q0 against the boundary-polynomial expression
        ws = ws_for(1, 2)
        with mpmath.workprec(128):
            lhs, terms = cd_parts("pq", 0.9, 2.2, ws)
            x, y = mpmath.mpf(0.9), mpmath.mpf(2.2)
            assert abs(lhs - (x + y) * ws.p(0, x) * ws.q(0, y)) < 1e-25
            assert abs(lhs - mpmath.fsum(terms)) < 1e-25

    @settings(max_examples=25, deadline=None)
    @given(st.sampled_from([(1, 1), (2, 3), (3, 3), (4, 5), (6, 7)]), st.floats(0.05, 25), st.floats(0.05, 25))
    def test_all_four(self, mn, x, y):
        ws = ws_for(*mn)
        for which in ("pq", "Pq", "pQ", "PQ"):
            assert cd_residual(which, x, y, ws) < 1e-8

    def test_unknown(self):
        with pytest.raises(ValueError):
            cd_residual("qp", 1.0, 1.0, ws_for(2, 3))


class TestDerivatives:
    def test_K01_example(self):
        assert deriv_residual("K01", 2.0, ws_for(3, 4)) < 1e-6

    def test_onepoint_example(self):
        assert deriv_residual("onepoint", 0.5, ws_for(2, 4)) < 1e-6

    def test_K10_m1_by_hand(self):
        # m = 1: x K10(x,x) = -x^(α+2) e^{-x} P_0(-x) q_0(x), differentiated directly
        ws = ws_for(1, 3)
        a = float(ws.params.a)
        x = 1.0
        with mpmath.workprec(128):
            def F(t):
                return -(t ** (a + 2)) * mpmath.exp(-t) * ws.P(0, t) * ws.q(0, t)

            direct = mpmath.diff(F, mpmath.mpf(x))
            from bureshall.kernels import deriv_closed_terms

            closed = mpmath.fsum(deriv_closed_terms("K10", mpmath.mpf(x), ws))
        assert float(closed) == pytest.approx(float(direct), rel=1e-12)
        assert deriv_residual("K10", x, ws) < 1e-6

    @pytest.mark.parametrize("mn", [(1, 1), (2, 2), (3, 5), (5, 5)])
    def test_all_three(self, mn):
        ws = ws_for(*mn)
        for x in (0.2, 1.5, 6.0, 15.0):
            for which in ("K01", "K10", "onepoint"):
                assert deriv_residual(which, x, ws) < 1e-6


class TestBiorthogonality:
    def test_diagonal(self):
        assert weighted_inner(2, 2, ws_for(4, 5)) == pytest.approx(1.0, abs=1e-8)

    def test_off_diagonal(self):
        assert weighted_inner(1, 3, ws_for(4, 5)) == pytest.approx(0.0, abs=1e-8)

    @pytest.mark.parametrize("mn", [(1, 1), (2, 2), (3, 4), (6, 8)])
    def test_identity_matrix(self, mn):
        ws = ws_for(*mn)
        G = np.array([[weighted_inner(k, l, ws) for l in range(6)] for k in range(6)])
        np.testing.assert_allclose(G, np.eye(6), atol=1e-8)

    def test_quadrature_method_agrees(self):
        ws = ws_for(2, 3)
        for k, l in [(0, 0), (1, 1), (2, 1), (3, 3)]:
            assert weighted_inner(k, l, ws, method="quadrature") == pytest.approx(float(k == l), abs=1e-7)

    def test_square_weight_example(self):
        ws = ws_for(3, 5)
        m = 3
        got = square_weight_integral(m, m + 1, "x", ws)
        assert got == pytest.approx(-float(ratio_sigma(m, ws.params)), abs=1e-7)
        assert square_weight_expected(m, m + 1, "x", ws.params) == -ratio_sigma(m, ws.params)

    @pytest.mark.parametrize("mn", [(2, 2), (3, 4), (5, 6)])
    def test_square_weight_table(self, mn):
        ws = ws_for(*mn)
        for i in range(5):
            for j in range(max(0, i - 3), i + 4):
                for w in ("x", "y"):
                    exp = float(square_weight_expected(i, j, w, ws.params))
                    assert square_weight_integral(i, j, w, ws) == pytest.approx(exp, abs=1e-8)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_hard_edge_square_case(m):
    # h1(x) ~ c x^(-1/2) at α = -1/2, so E[Σ x^-1] diverges there
    ws = ws_for(m, m)
    c = [density_h1(x, ws) * np.sqrt(x) for x in (1e-8, 1e-10)]
    assert c[0] > 0.5
    assert c[0] == pytest.approx(c[1], rel=1e-4)
