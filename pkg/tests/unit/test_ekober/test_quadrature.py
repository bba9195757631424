"""Tests for the quadrature path of the EK operators against the Gamma-ratio rules."""

import numpy as np
import pytest

from fracsym.ekober.exact import ek_diff_gp, ek_integral_gp
from fracsym.ekober.operators import ek_diff, ek_integral
from fracsym.ekober.params import EKParams
from fracsym.ekober.quadrature import ek_diff_quad, ek_integral_quad
from fracsym.exceptions import DomainError
from fracsym.fraccore.polynomial import GeneralizedPolynomial

GP = GeneralizedPolynomial
POINTS = np.array([0.3, 1.0, 2.5])


class TestEkIntegralQuad:
    @pytest.mark.parametrize(
        "mu, c, a, b",
        [(0.5, 2.0, 0.5, 2.0), (0.0, 2.0, 1.0, 1.0), (-0.4, 0.3, 0.7, -1.5), (1.2, 1.5, 2.3, 3.0), (0.25, 0.8, 0.2, 0.5)],
    )
    def test_matches_gamma_ratio(self, mu, c, a, b):
        params = EKParams(c, a, b)
        f = GP.monomial(mu)
        numeric = ek_integral_quad(f, params, POINTS, growth=mu)
        exact = ek_integral_gp(f, params).value(POINTS)
        np.testing.assert_allclose(numeric, exact, rtol=1e-7)

    def test_power_sum_with_integer_stretch(self):
        params = EKParams(3.0, 0.5, 1.0)
        f = GP.from_pairs([(1.0, 0.0), (1.0, 1.0)])
        numeric = ek_integral_quad(f, params, POINTS, growth=1.0)
        np.testing.assert_allclose(numeric, ek_integral_gp(f, params).value(POINTS), rtol=1e-7)

    def test_scalar_point(self):
        out = ek_integral_quad(lambda y: np.ones_like(y), EKParams(2.0, 1.0, 1.0), 1.0)
        assert out.shape == (1,)
        assert out[0] == pytest.approx(0.5)

    def test_zero_order_returns_samples(self):
        out = ek_integral_quad(np.sqrt, EKParams(1.0, 0.0, 1.0), POINTS)
        np.testing.assert_array_equal(out, np.sqrt(POINTS))

    def test_non_positive_points(self):
        with pytest.raises(DomainError, match="positive points"):
            ek_integral_quad(np.sqrt, EKParams(2.0, 0.5, 1.0), np.array([0.0, 1.0]))

    def test_divergent_growth(self):
        with pytest.raises(DomainError, match="diverges"):
            ek_integral_quad(lambda y: y**2, EKParams(1.0, 0.5, 1.0), POINTS, growth=2.0)

    def test_dispatch_with_callable(self):
        params = EKParams(2.0, 0.5, 2.0)
        out = ek_integral(lambda y: y**0.5, params, POINTS, growth=0.5)
        np.testing.assert_allclose(out, ek_integral_gp(GP.monomial(0.5), params).value(POINTS), rtol=1e-7)


class TestEkDiffQuad:
    @pytest.mark.parametrize("c, a, b", [(0.5, 0.5, 2.0), (1.0, 1.5, 2.0), (0.7, 0.3, 1.0)])
    def test_matches_gamma_ratio(self, c, a, b):
        params = EKParams(c, a, b)
        f = GP.monomial(0.5)
        numeric = ek_diff_quad(f, params, POINTS, growth=0.5)
        exact = ek_diff_gp(f, params).value(POINTS)
        np.testing.assert_allclose(numeric, exact, rtol=1e-6)

    def test_dispatch_with_callable(self):
        params = EKParams(0.5, 0.5, 2.0)
        out = ek_diff(lambda y: y**0.5, params, POINTS, growth=0.5)
        np.testing.assert_allclose(out, 0.337989 * POINTS**0.5, rtol=1e-5)
