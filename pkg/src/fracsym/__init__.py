"""
fracsym - Riemann-Liouville fractional calculus, fractional Lie prolongation and
the scaling reduction of the fractional KdV-Burgers equation.

Exact paths act on generalized polynomials (finite power sums); numeric paths
act on functions sampled on uniform grids, with 2D operators mapped over grid
lines by a thread pool.
"""

__version__ = "0.1.0"

from fracsym.executor import LineExecutor
from fracsym.fkdvb import FkdvbParams, solve_scaling
from fracsym.fraccore import (
    BivariatePowerSum,
    GeneralizedPolynomial,
    GridFunction1D,
    GridFunction2D,
    UniformGrid1D,
)
from fracsym.reduce import ReducedProblem, solve_reduced

__all__ = [
    "BivariatePowerSum",
    "FkdvbParams",
    "GeneralizedPolynomial",
    "GridFunction1D",
    "GridFunction2D",
    "LineExecutor",
    "ReducedProblem",
    "UniformGrid1D",
    "solve_reduced",
    "solve_scaling",
]
