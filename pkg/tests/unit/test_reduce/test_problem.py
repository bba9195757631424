"""Tests for the reduced problem setup."""

import numpy as np
import pytest

from fracsym.exceptions import DomainError
from fracsym.fkdvb.params import FkdvbParams
from fracsym.reduce.problem import (
    ReducedProblem,
    admissible_strip,
    default_basis,
    leading_exponent,
)

PARAMS = FkdvbParams(0.5, 0.3, 1.7)


class TestAdmissibleStrip:
    def test_defaults(self):
        assert admissible_strip(PARAMS) == pytest.approx((-1.0, 2.0))

    def test_equal_orders(self):
        assert admissible_strip(FkdvbParams(0.5, 0.7, 0.7)) == pytest.approx((-1.0, 1.4))


class TestDefaultBasis:
    def test_starts_at_lowest_dispersive_kernel_exponent(self):
        # D^1.7 annihilates z^0.7 and z^-0.3
        gamma0, _ = default_basis(PARAMS, 10)
        assert gamma0 == pytest.approx(-0.3)

    def test_large_basis_is_spread_below_strip_edge(self):
        gamma0, delta = default_basis(PARAMS, 10)
        assert delta == pytest.approx(0.95 * 2.3 / 9)
        assert gamma0 + 9 * delta < admissible_strip(PARAMS)[1]

    def test_small_basis_uses_q_steps(self):
        assert default_basis(PARAMS, 3) == pytest.approx((-0.3, 0.3))
        assert default_basis(PARAMS, 1) == pytest.approx((-0.3, 0.3))

    def test_kernel_exponent_inside_a_narrow_strip(self):
        params = FkdvbParams(0.9, 0.1, 2.5)
        assert leading_exponent(params) == pytest.approx(-0.5)

    def test_no_kernel_exponent_in_strip_falls_back_to_midpoint(self):
        params = FkdvbParams(1.9, 0.1, 1.5)
        lo, hi = admissible_strip(params)
        assert hi < -0.5
        gamma0, _ = default_basis(params, 4)
        assert gamma0 == pytest.approx((lo + hi) / 2.0)


class TestReducedProblem:
    def test_build_defaults(self):
        problem = ReducedProblem.build(PARAMS)
        assert (problem.z_min, problem.z_max) == (0.2, 2.0)
        assert problem.size == 10
        assert problem.collocation == 24
        assert problem.z_ref == 2.0
        assert problem.exponents[0] == pytest.approx(-0.3)
        assert problem.exponents[-1] == pytest.approx(-0.3 + 0.95 * 2.3)

    def test_collocation_points(self):
        z = ReducedProblem.build(PARAMS, collocation=9, size=3).collocation_points
        assert z[0] == pytest.approx(0.2)
        assert z[-1] == pytest.approx(2.0)
        assert np.all(np.diff(z) > 0)
        # Chebyshev-Lobatto points are symmetric about the midpoint
        np.testing.assert_allclose(z + z[::-1], 2.2)

    @pytest.mark.parametrize(
        "overrides, message",
        [
            ({"z_min": 0.0}, "z_min"),
            ({"z_min": 2.0, "z_max": 1.0}, "z_min"),
            ({"size": 4, "collocation": 3}, "at least the basis size"),
            ({"z_ref": -1.0}, "normalization point"),
            ({"tolerance": 0.0}, "tolerance"),
        ],
    )
    def test_invalid_problem(self, overrides, message):
        with pytest.raises(DomainError, match=message):
            ReducedProblem.build(PARAMS, **overrides)

    def test_exponents_outside_strip(self):
        with pytest.raises(DomainError, match="admissible strip"):
            ReducedProblem(PARAMS, 0.2, 2.0, gamma0=1.5, delta=0.3, size=3, z_ref=1.0, w0=1.0, collocation=8)

    def test_empty_basis(self):
        with pytest.raises(DomainError, match="basis size"):
            ReducedProblem(PARAMS, 0.2, 2.0, gamma0=0.7, delta=0.1, size=0, z_ref=1.0, w0=1.0, collocation=8)
