from fracsym.fraccore.bivariate import BivariatePowerSum, BivariateTerm
from fracsym.fraccore.compare import DEFAULT_WINDOW, probe_points, relative_deviation
from fracsym.fraccore.grid import GridFunction1D, GridFunction2D, UniformGrid1D, mesh
from fracsym.fraccore.parsing import format_bivariate, format_gp, parse_bivariate, parse_gp
from fracsym.fraccore.polynomial import (
    GeneralizedPolynomial,
    PowerTerm,
    gp_eval,
    gp_mul,
    gp_rl_deriv,
    gp_rl_integral,
    sample,
)

__all__ = [
    "DEFAULT_WINDOW",
    "BivariatePowerSum",
    "BivariateTerm",
    "GeneralizedPolynomial",
    "GridFunction1D",
    "GridFunction2D",
    "PowerTerm",
    "UniformGrid1D",
    "format_bivariate",
    "format_gp",
    "gp_eval",
    "gp_mul",
    "gp_rl_deriv",
    "gp_rl_integral",
    "mesh",
    "parse_bivariate",
    "parse_gp",
    "probe_points",
    "relative_deviation",
    "sample",
]
