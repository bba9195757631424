"""Tests for window error norms."""

import math

import numpy as np
import pytest

from fracsym.exceptions import DomainError, GridSizeError
from fracsym.fraccore.grid import GridFunction1D, GridFunction2D, UniformGrid1D
from fracsym.frlnum.norms import evaluation_mask, observed_order, window_errors


@pytest.fixture
def grid():
    return UniformGrid1D.span(0.0, 1.0, 11)


class TestWindowErrors:
    def test_against_callable(self, grid):
        f = GridFunction1D(grid, grid.nodes + 0.01)
        errors = window_errors(f, lambda t: t)
        assert errors.max_abs == pytest.approx(0.01)
        assert errors.max_rel == pytest.approx(0.1)
        assert errors.rms == pytest.approx(0.01)
        assert errors.nodes == 10

    def test_flagged_nodes_are_excluded(self, grid):
        values = grid.nodes.copy()
        values[5] += 1.0
        flags = np.zeros(11, dtype=bool)
        flags[5] = True
        errors = window_errors(GridFunction1D(grid, values, flags), grid.nodes)
        assert errors.max_abs == pytest.approx(0.0, abs=1e-15)
        assert errors.nodes == 9

    def test_zero_reference_falls_back_to_absolute(self, grid):
        errors = window_errors(GridFunction1D(grid, np.full(11, 1e-3)), np.zeros(11))
        assert errors.max_rel == pytest.approx(1e-3)

    def test_two_dimensional(self, grid):
        u = GridFunction2D.from_function(grid, grid, lambda x1, x2: x1 * x2)
        errors = window_errors(u, u)
        assert errors.max_abs == 0.0
        assert errors.nodes == 100

    def test_shape_mismatch(self, grid):
        with pytest.raises(GridSizeError):
            window_errors(GridFunction1D(grid, np.zeros(11)), np.zeros(5))

    def test_empty_window(self, grid):
        f = GridFunction1D(grid, np.zeros(11), np.ones(11, dtype=bool))
        with pytest.raises(DomainError, match="no full-accuracy nodes"):
            window_errors(f, np.zeros(11))

    def test_evaluation_mask(self, grid):
        f = GridFunction1D(grid, np.zeros(11), np.eye(11, dtype=bool)[10])
        assert evaluation_mask(f, (0.5, 1.0)).tolist() == [False] * 5 + [True] * 5 + [False]


class TestObservedOrder:
    def test_second_order(self):
        assert observed_order(1e-2, 2.5e-3) == pytest.approx(2.0)

    def test_exact_fine_result(self):
        assert observed_order(1e-3, 0.0) == math.inf
