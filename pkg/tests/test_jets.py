"""Jet arithmetic: exact truncated series against hand derivatives."""

import math

import pytest

from hsob import Jet, JetDomainError


class TestBasics:
    def test_variable_jet(self):
        j = Jet.variable(2.0, 3)
        assert j.value == 2.0
        assert j.derivative(1) == 1.0
        assert j.derivative(2) == 0.0

    def test_square(self):
        j = Jet.variable(1.0, 2)
        sq = j * j
        assert [sq.derivative(k) for k in range(3)] == [1.0, 2.0, 2.0]

    def test_add_scalar(self):
        j = Jet.variable(1.0, 2) + 3.0
        assert j.value == 4.0

    def test_order_cap(self):
        with pytest.raises(ValueError):
            Jet.variable(1.0, 13)


class TestDivision:
    def test_reciprocal_derivatives(self):
        # 1/(1+z) at z=1: derivatives (-1)^k k!/2^(k+1)
        j = 1.0 / (Jet.variable(1.0, 4) + 1.0)
        for k in range(5):
            expected = (-1) ** k * math.factorial(k) / 2 ** (k + 1)
            assert abs(j.derivative(k) - expected) < 1e-14

    def test_zero_denominator(self):
        with pytest.raises(JetDomainError):
            1.0 / (Jet.variable(1.0, 2) - 1.0)


class TestPower:
    def test_sqrt_at_four(self):
        j = Jet.variable(4.0, 2).power(0.5)
        assert abs(j.derivative(0) - 2.0) < 1e-14
        assert abs(j.derivative(1) - 0.25) < 1e-14
        assert abs(j.derivative(2) + 1 / 32) < 1e-14

    def test_fractional_power_derivatives(self):
        # (z^0.3)''' at z = 2: 0.3*(-0.7)*(-1.7) * 2^(0.3-3)
        j = Jet.variable(2.0, 3).power(0.3)
        expected = 0.3 * (-0.7) * (-1.7) * 2.0 ** (0.3 - 3)
        assert abs(j.derivative(3) - expected) < 1e-14

    def test_branch_guard(self):
        with pytest.raises(JetDomainError):
            Jet.variable(-1.0, 2).power(0.5)


class TestLog1p:
    def test_derivatives_at_one(self):
        # log(1+z): k-th derivative (-1)^(k-1) (k-1)!/(1+z)^k at z = 1
        j = Jet.variable(1.0, 4).log1p()
        assert abs(j.value - math.log(2.0)) < 1e-15
        for k in range(1, 5):
            expected = (-1) ** (k - 1) * math.factorial(k - 1) / 2**k
            assert abs(j.derivative(k) - expected) < 1e-14

    def test_branch_guard(self):
        with pytest.raises(JetDomainError):
            (Jet.variable(-3.0, 2)).log1p()


class TestCompose:
    def test_exp_like_composition(self):
        # f(u) = 1/(1+u) composed with phi(z) = z^2 at z = 1: 1/(1+z^2)
        phi = Jet.variable(1.0, 4) * Jet.variable(1.0, 4)
        f = 1.0 / (Jet.variable(phi.value, 4) + 1.0)
        composed = f.compose(phi)
        # direct derivatives of 1/(1+z^2) at 1: value 1/2, first -1/2, second 1/2
        assert abs(composed.derivative(0) - 0.5) < 1e-14
        assert abs(composed.derivative(1) + 0.5) < 1e-14
        assert abs(composed.derivative(2) - 0.5) < 1e-14

    def test_base_mismatch_rejected(self):
        phi = Jet.variable(1.0, 3)
        f = Jet.variable(5.0, 3)  # based at 5, phi(1) = 1
        with pytest.raises(ValueError):
            f.compose(phi)

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            Jet.variable(1.0, 2).compose(Jet.variable(1.0, 3))
