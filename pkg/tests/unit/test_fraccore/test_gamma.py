"""Tests for the Gamma helpers and termwise power rules."""

import math

import pytest

from fracsym.exceptions import DomainError
from fracsym.fraccore.gamma import (
    binomial,
    falling_factorial,
    gamma_ratio,
    is_pole,
    rgamma,
    rising_factorial,
)
from fracsym.fraccore.rules import (
    check_exponent,
    check_order,
    classical_derivative_rule,
    rl_derivative_rule,
    rl_integral_rule,
)


class TestPoles:
    @pytest.mark.parametrize("x", [0.0, -1.0, -3.0, -1.0000000000000002])
    def test_non_positive_integers_are_poles(self, x):
        assert is_pole(x)

    @pytest.mark.parametrize("x", [1.0, 0.5, -0.5, -2.999])
    def test_other_points_are_not(self, x):
        assert not is_pole(x)

    def test_rgamma_vanishes_at_poles(self):
        assert rgamma(-2.0) == 0.0
        assert rgamma(0.5 + 1 - 1.5000000000000002) == 0.0

    def test_rgamma_regular_values(self):
        assert rgamma(1.0) == pytest.approx(1.0)
        assert rgamma(0.5) == pytest.approx(1.0 / math.sqrt(math.pi))


class TestGammaRatio:
    def test_regular(self):
        assert gamma_ratio(1.5, 1.0) == pytest.approx(math.sqrt(math.pi) / 2)

    def test_denominator_pole_gives_zero(self):
        assert gamma_ratio(1.0, 0.0) == 0.0
        assert gamma_ratio(0.5, -1.0) == 0.0

    def test_numerator_pole_raises(self):
        with pytest.raises(DomainError, match="pole in the numerator"):
            gamma_ratio(0.0, 1.0)

    def test_pole_over_pole_takes_the_limit(self):
        # Gamma(-1+d)/Gamma(-2+d) = -2+d
        assert gamma_ratio(-1.0, -2.0) == pytest.approx(-2.0)
        assert gamma_ratio(-2.0, -2.0) == pytest.approx(1.0)

    def test_large_arguments_do_not_overflow(self):
        expected = math.sqrt(200.0) * (1.0 - 1.0 / 1600.0)
        assert gamma_ratio(200.5, 200.0) == pytest.approx(expected, rel=1e-5)


class TestFactorials:
    def test_falling(self):
        assert falling_factorial(0.5, 2) == pytest.approx(-0.25)
        assert falling_factorial(3.0, 0) == 1.0

    def test_rising(self):
        assert rising_factorial(1.0, 3) == 6.0

    def test_binomial(self):
        assert binomial(5.0, 2) == pytest.approx(10.0)
        assert binomial(0.5, 2) == pytest.approx(-0.125)


class TestRules:
    def test_half_derivative_of_identity(self):
        factor, exponent = rl_derivative_rule(1.0, 0.5)
        assert factor == pytest.approx(1.1283791671)
        assert exponent == 0.5

    def test_kernel_power_is_annihilated(self):
        factor, exponent = rl_derivative_rule(-0.5, 0.5)
        assert factor == 0.0
        assert exponent == -1.0

    def test_integer_order_is_classical(self):
        assert rl_derivative_rule(2.0, 1.0) == (2.0, 1.0)
        assert rl_derivative_rule(1.0, 2.0)[0] == 0.0

    def test_integral(self):
        factor, exponent = rl_integral_rule(0.0, 0.5)
        assert factor == pytest.approx(1.0 / math.gamma(1.5))
        assert exponent == 0.5
        assert rl_integral_rule(1.0, 1.0) == pytest.approx((0.5, 2.0))

    def test_classical_rule_accepts_any_exponent(self):
        assert classical_derivative_rule(-2.0, 1) == (-2.0, -3.0)

    @pytest.mark.parametrize("mu", [-1.0, -1.5, -3.0])
    def test_non_integrable_exponent_raises(self, mu):
        with pytest.raises(DomainError, match="integrability floor"):
            check_exponent(mu, "RL derivative")
        with pytest.raises(DomainError):
            rl_derivative_rule(mu, 0.5)

    def test_order_checks(self):
        assert check_order(0) == 0.0
        with pytest.raises(DomainError, match="non-negative"):
            check_order(-0.1)
        with pytest.raises(DomainError, match="positive"):
            check_order(0.0, strictly_positive=True)
        with pytest.raises(DomainError, match="finite"):
            check_order(float("nan"))
