"""Tests for bivariate power sums."""

import math

import numpy as np
import pytest

from fracsym.exceptions import DomainError
from fracsym.fraccore.bivariate import BivariatePowerSum
from fracsym.fraccore.polynomial import GeneralizedPolynomial

BPS = BivariatePowerSum


class TestConstruction:
    def test_like_terms_merge(self):
        u = BPS.from_triples([(1.0, 0.5, 1.0), (2.0, 0.5, 1.0), (1.0, 1.0, 0.0)])
        assert u.triples == ((3.0, 0.5, 1.0), (1.0, 1.0, 0.0))

    def test_cancelling_terms_vanish(self):
        u = BPS.monomial(1.0, 2.0) - BPS.monomial(1.0, 2.0)
        assert u.is_zero

    @pytest.mark.parametrize("axis, expected", [(1, ((2.0, 0.5, 0.0),)), (2, ((2.0, 0.0, 0.5),))])
    def test_from_gp(self, axis, expected):
        assert BPS.from_gp(GeneralizedPolynomial.monomial(0.5, 2.0), axis).triples == expected

    def test_bad_axis_raises(self):
        with pytest.raises(DomainError, match="axis"):
            BPS.monomial(1.0, 1.0).rl_deriv(3, 0.5)


class TestAxisOperators:
    def test_half_derivative_in_x1(self):
        [(coeff, mu1, mu2)] = BPS.monomial(1.0, 1.0).rl_deriv(1, 0.5).triples
        assert coeff == pytest.approx(1.1283791671)
        assert (mu1, mu2) == (0.5, 1.0)

    def test_axis_derivatives_commute_on_power_sums(self):
        u = BPS.from_triples([(1.0, 1.0, 0.5), (2.0, 0.25, 1.5)])
        a = u.rl_deriv(1, 0.5).rl_deriv(2, 0.3)
        b = u.rl_deriv(2, 0.3).rl_deriv(1, 0.5)
        for (ca, *ea), (cb, *eb) in zip(a.triples, b.triples, strict=True):
            assert ca == pytest.approx(cb, rel=1e-14)
            assert ea == eb

    def test_integral_then_derivative(self):
        u = BPS.monomial(0.5, 2.0, 3.0)
        back = u.rl_integral(2, 0.4).rl_deriv(2, 0.4)
        assert list(back.triples[0]) == pytest.approx(list(u.triples[0]))
        assert len(back.triples) == 1

    def test_partial(self):
        assert BPS.monomial(2.0, 3.0).partial(2).triples == ((3.0, 2.0, 2.0),)

    def test_multiply_monomial(self):
        u = BPS.monomial(0.5, 1.0).multiply_monomial(1.0, -0.5, 2.0)
        assert u.triples == ((2.0, 1.5, 0.5),)

    def test_scale_arguments(self):
        [(coeff, _, _)] = BPS.monomial(0.5, 1.0).scale_arguments(2.0, 3.0).triples
        assert coeff == pytest.approx(3.0 * math.sqrt(2.0))
        with pytest.raises(DomainError):
            BPS.monomial(0.5, 1.0).scale_arguments(-1.0, 1.0)


class TestEvaluation:
    def test_broadcasts(self):
        u = BPS.from_triples([(1.0, 1.0, 0.0), (1.0, 0.0, 1.0)])
        out = u(np.array([[1.0, 2.0]]), np.array([[3.0], [4.0]]))
        np.testing.assert_allclose(out, [[4.0, 5.0], [5.0, 6.0]])

    def test_scalar(self):
        assert BPS.monomial(0.5, 2.0).evaluate(4.0, 3.0) == pytest.approx(18.0)

    def test_restrict(self):
        f = BPS.monomial(0.5, 0.5).restrict(2, 4.0)
        assert f.variable == "x1"
        assert [(t.coeff, t.exponent) for t in f.terms] == [(2.0, 0.5)]

    def test_singular_axis_at_zero_raises(self):
        with pytest.raises(DomainError):
            BPS.monomial(-0.5, 1.0).evaluate(0.0, 1.0)

    def test_product(self):
        u = BPS.monomial(1.0, 0.0) + BPS.monomial(0.0, 1.0)
        square = u * u
        assert square.triples == ((1.0, 0.0, 2.0), (2.0, 1.0, 1.0), (1.0, 2.0, 0.0))
