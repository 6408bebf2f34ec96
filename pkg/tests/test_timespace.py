"""Repeated integration, the Hardy-type inequality, the g family, point bounds."""

import math

import numpy as np
import pytest

from hsob import (
    ExpPoly,
    GFunction,
    QuadConfig,
    exp_series_remainder,
    hardy_constant,
    integrate_halfline,
    kernel_eval_closed,
    norm_n,
    point_estimate_check,
    point_estimate_constant,
    w_minus,
    w_minus_exp,
)


class TestWMinus:
    def test_single_integration_of_exponential(self):
        e1 = ExpPoly.exponential(1.0)
        for t in (0.0, 0.5, 2.0):
            assert abs(w_minus(e1, 1, t) - math.exp(-t)) < 1e-14

    def test_double_integration_at_zero(self):
        # int_0^inf s e^{-s} ds = Gamma(2) = 1
        assert abs(w_minus(ExpPoly.exponential(1.0), 2, 0.0) - 1.0) < 1e-14

    def test_derivative_relation(self):
        # (W^-2 f)' = -W^-1 f at sampled t
        f = ExpPoly(((1.0, 1, 1.5), (0.5, 0, 0.7)))
        lhs = w_minus_exp(f, 2).derivative()
        rhs = -1.0 * w_minus_exp(f, 1)
        for t in (0.1, 1.0, 4.0):
            assert abs(lhs(t) - rhs(t)) < 1e-12

    @pytest.mark.parametrize("n", range(1, 5))
    def test_inverts_differentiation(self, n):
        # (-1)^n (W^-n phi)^(n) = phi, exact in the algebra
        phi = ExpPoly(((2.0, 2, 1.0), (1.0 - 0.5j, 0, 2.0 + 1.0j)))
        recovered = (-1.0) ** n * w_minus_exp(phi, n).derivative(n)
        diff = recovered - phi
        for t in (0.2, 1.0, 3.0):
            assert abs(diff(t)) < 1e-10

    def test_callable_route_matches_exact(self):
        f = ExpPoly.monomial(1.0, 1, 2.0)
        exact = w_minus(f, 2, 0.5)
        numeric = w_minus(lambda t: t * np.exp(-2 * t), 2, 0.5, decay_scale=0.5)
        assert abs(exact - numeric) < 1e-9

    def test_insufficient_decay_signals(self):
        from hsob import QuadratureError

        with pytest.raises(QuadratureError):
            w_minus(lambda t: 1.0 / (1.0 + t), 2, 0.5, decay_scale=1.0)


class TestHardyInequality:
    def test_constants(self):
        assert hardy_constant(1) == 2.0
        # Gamma(5/2) = 3 sqrt(pi)/4
        assert abs(hardy_constant(2) - 4 / 3) < 1e-15

    def test_exponential_example(self):
        # int (W^-1 e^{-t})^2 = 1/2 <= 4 int (t e^{-t})^2 = 1
        phi = ExpPoly.exponential(1.0)
        w1 = w_minus_exp(phi, 1)
        lhs = (w1 * w1).integral().real
        rhs = hardy_constant(1) ** 2 * (phi.times_power(1) * phi.times_power(1)).integral().real
        assert abs(lhs - 0.5) < 1e-14
        assert abs(rhs - 1.0) < 1e-14
        assert lhs <= rhs

    @pytest.mark.parametrize("m", (1, 2, 3))
    def test_random_positive_samples(self, m):
        rng = np.random.default_rng(40 + m)
        for _ in range(50):
            terms = tuple(
                (float(rng.uniform(0.05, 2.0)), int(rng.integers(0, 3)),
                 float(rng.uniform(0.3, 3.0)))
                for _ in range(int(rng.integers(1, 4)))
            )
            phi = ExpPoly(terms)
            wm = w_minus_exp(phi, m)
            lhs = (wm * wm).integral().real
            weighted = phi.times_power(m)
            rhs = hardy_constant(m) ** 2 * (weighted * weighted).integral().real
            assert lhs <= rhs * (1 + 1e-12)


class TestGFunction:
    def test_weighted_derivative_low_order(self):
        # t g'_{w,1}(t) = -(1 - e^{-wt})/(wt); oracle: integral of e^{-s} on (0,1)
        g = GFunction(1.0, 1)
        assert abs(g.weighted_derivative(1.0) - (-(1 - math.exp(-1)))) < 1e-14

    def test_series_vs_remainder_forms(self):
        # both sides of the E_n switchover agree (oracle: long direct series)
        for n in (1, 3, 6):
            for x in (11.5 + 0.5j, 12.5 - 1.0j, 11.9, 12.1):
                series = sum((-x) ** m / math.factorial(n + m) for m in range(120))
                assert abs(exp_series_remainder(n, x) - series) < 1e-10 * abs(series)

    def test_norm_bound_on_log_polar_grid(self):
        for r in (0.1, 1.0, 10.0):
            for theta in (-1.2, 0.0, 1.2):
                w = r * complex(math.cos(theta), math.sin(theta))
                for n in (1, 2, 3, 4):
                    g = GFunction(w, n)
                    assert g.norm() * math.sqrt(w.real) <= 2 * math.log(2) * (1 + 1e-9)

    def test_eval_matches_integration_operator(self):
        # g = W^-n applied to the inner-profile; cross-check one point
        n, w, t = 2, 1.5, 0.8
        g = GFunction(w, n)
        profile = lambda s: s ** (-n) * exp_series_remainder(n, s * w)
        direct = w_minus(profile, n, t, decay_scale=2.0)
        assert abs(g(t) - direct) < 1e-9

    def test_laplace_transform_hits_kernel(self):
        # int_0^inf g_{1,1}(t) e^{-t} dt equals the order-1 kernel at (1, 1);
        # nested quadrature, so the outer tolerance sits above the inner noise
        inner = QuadConfig(abs_tol=1e-9, rel_tol=1e-8)
        outer = QuadConfig(abs_tol=1e-5, rel_tol=1e-5, max_subdiv=800)
        g = GFunction(1.0, 1)

        def integrand(t):
            ts = np.atleast_1d(t)
            return np.array([g(float(tt), inner) * math.exp(-tt) for tt in ts])

        val = integrate_halfline(integrand, 1.0, outer).value
        assert abs(val - kernel_eval_closed(1, 1.0, 1.0)) < 1e-4

    def test_validation(self):
        with pytest.raises(ValueError):
            GFunction(-1.0, 1)
        with pytest.raises(ValueError):
            GFunction(1.0, 0)


class TestPointEstimate:
    def test_constant_low_orders(self):
        # B(1, 1) = 1 at (n, k) = (1, 0)
        assert point_estimate_constant(1, 0) == 1.0
        with pytest.raises(ValueError):
            point_estimate_constant(2, 2)

    def test_bound_holds_on_examples(self):
        e1 = ExpPoly.exponential(1.0)
        for t in (0.1, 1.0, 10.0):
            assert point_estimate_check(e1, 1, 0, t) >= 0
        f = ExpPoly.monomial(1.0, 1, 2.0)
        assert point_estimate_check(f, 2, 1, 0.5) >= 0

    def test_bound_holds_on_random_samples(self):
        rng = np.random.default_rng(55)
        for _ in range(25):
            f = ExpPoly(tuple(
                (complex(rng.uniform(-1, 1), rng.uniform(-1, 1)), int(rng.integers(0, 3)),
                 complex(rng.uniform(0.4, 2.0), rng.uniform(-1.0, 1.0)))
                for _ in range(2)
            ))
            n = int(rng.integers(1, 5))
            k = int(rng.integers(0, n))
            t = float(rng.uniform(0.05, 20.0))
            assert point_estimate_check(f, n, k, t) >= -1e-12

    def test_scaling_exponent(self):
        # the bound scales exactly like t^(-k-1/2): log-log slope test
        f = ExpPoly.exponential(1.0)
        n, k = 3, 1
        c = point_estimate_constant(n, k) * norm_n(f, n)
        t1, t2 = 0.5, 50.0
        slope = (math.log(c * t2 ** (-k - 0.5)) - math.log(c * t1 ** (-k - 0.5))) / (
            math.log(t2) - math.log(t1)
        )
        assert abs(slope - (-k - 0.5)) < 1e-12
