"""Tests for the fKdV-Burgers order parameters."""

import pytest

from fracsym.exceptions import DomainError
from fracsym.fkdvb.params import Branch, FkdvbParams


class TestFkdvbParams:
    def test_defaults_are_distinct_branch(self):
        params = FkdvbParams(0.5, 0.3, 1.7)
        assert params.orders == (0.5, 0.3, 1.7)
        assert params.branch is Branch.DISTINCT
        assert params.integer_orders == ()

    def test_equal_branch(self):
        assert FkdvbParams(0.5, 0.7, 0.7).branch is Branch.EQUAL

    def test_equivariance_exponent(self):
        assert FkdvbParams(0.5, 0.3, 1.7).equivariance_exponent == pytest.approx(-1.55)

    @pytest.mark.parametrize(
        "orders, message",
        [
            ((0.0, 0.3, 1.7), "positive"),
            ((0.5, -0.3, 1.7), "positive"),
            ((0.5, float("nan"), 1.7), "finite"),
            ((0.5, 1.8, 1.7), "q <= r"),
        ],
    )
    def test_invalid_orders(self, orders, message):
        with pytest.raises(DomainError, match=message):
            FkdvbParams(*orders)

    def test_integer_orders_need_opt_in(self):
        with pytest.raises(DomainError, match="allow_integer"):
            FkdvbParams(1.0, 0.3, 1.7)
        params = FkdvbParams(1.0, 1.0, 3.0, allow_integer=True)
        assert params.integer_orders == ("p", "q", "r")
