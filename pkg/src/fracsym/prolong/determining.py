"""Determining equation of the fKdV-Burgers equation for a point field.

Off shell the prolonged field acts as

    phi^p_2 + u phi^q_1 + phi u^{(q,0)} + phi^r_1,

and for a scaling field the substitution u^{(0,p)} = -u u^{(q,0)} - u^{(r,0)}
leaves (cu + p c2 - q c1) u u^{(q,0)} + (p c2 - r c1) u^{(r,0)}, with
{u u^{(q,0)}, u^{(r,0)}} treated as independent.

The coefficient formulas assume the field leaves the lower terminal lines
x_m = 0 invariant; ``terminal_defect`` measures how far a field is from that.
"""

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from fracsym.exceptions import DomainError
from fracsym.fraccore.bivariate import BivariatePowerSum
from fracsym.fraccore.compare import DEFAULT_WINDOW
from fracsym.fraccore.grid import GridFunction2D
from fracsym.fraccore.rules import exponents_equal
from fracsym.frlnum.operators import partial_rl_deriv_2d
from fracsym.frlnum.schemes import SchemeKind
from fracsym.prolong.coefficients import phi_p, resolve_field, scaling_factor
from fracsym.prolong.fields import Field, PowerSumField, ScalingField
from fracsym.utils.logging import setup_logger

if TYPE_CHECKING:
    from fracsym.fkdvb.params import FkdvbParams

logger = setup_logger(__name__)

TERMINAL_ATOL = 1e-14
COEFFICIENT_ATOL = 1e-12


@dataclass(frozen=True)
class DeterminingReport:
    """`on_shell` holds the coefficients of (u u^{(q,0)}, u^{(r,0)}) for scaling fields."""

    off_shell: BivariatePowerSum | GridFunction2D
    on_shell: tuple[float, float] | None
    terminal_defect: float

    @property
    def is_symmetry(self) -> bool | None:
        """True/False when decidable; None for a terminal-invariant non-scaling field."""
        if self.terminal_defect > TERMINAL_ATOL:
            return False
        if self.on_shell is None:
            return None
        return all(abs(c) <= COEFFICIENT_ATOL for c in self.on_shell)


def on_shell_coefficients(field: ScalingField, params: "FkdvbParams") -> tuple[float, float]:
    """Coefficients of u u^{(q,0)} and u^{(r,0)} after eliminating u^{(0,p)}."""
    k_p = scaling_factor(field, 2, params.p)
    k_q = scaling_factor(field, 1, params.q)
    k_r = scaling_factor(field, 1, params.r)
    # phi u^{(q,0)} adds cu to the u u^{(q,0)} coefficient
    return (k_q + field.cu - k_p, k_r - k_p)


def _power_sum_defect(xi: BivariatePowerSum, axis: int, window: tuple[float, float]) -> float:
    other_axis = np.linspace(*window, 17)
    defect = 0.0
    for term in xi.terms:
        mu = term.exponent(axis)
        if exponents_equal(mu, 0.0):
            other = term.mu2 if axis == 1 else term.mu1
            defect = max(defect, float(np.max(np.abs(term.coeff * other_axis**other))))
        elif mu < 0:
            return math.inf
    return defect


def terminal_defect(field: Field, window: tuple[float, float] = DEFAULT_WINDOW) -> float:
    """max |xi^m| on the terminal line x_m = 0, over m = 1, 2."""
    if isinstance(field, ScalingField):
        return 0.0
    if isinstance(field, PowerSumField):
        return max(_power_sum_defect(field.xi(axis), axis, window) for axis in (1, 2))
    # samples are (n2, n1): x1 = 0 is column 0, x2 = 0 is row 0
    return max(
        float(np.max(np.abs(field.xi1.samples[:, 0]))),
        float(np.max(np.abs(field.xi2.samples[0, :]))),
    )


def determining_eval(
    field: Field,
    u: BivariatePowerSum | GridFunction2D,
    params: "FkdvbParams",
    non_integer_branch: bool = True,
    scheme: SchemeKind = SchemeKind.PRODUCT_TRAPEZOID,
    n_workers: int | None = None,
) -> DeterminingReport:
    """Evaluate the determining expression of `field` along `u`."""
    if non_integer_branch and params.integer_orders:
        raise DomainError(
            f"the non-integer branch needs non-integer p, q, r; got integer {params.integer_orders}"
        )
    _, _, phi = resolve_field(field, u, scheme, n_workers)

    if isinstance(u, BivariatePowerSum):
        u_q = u.rl_deriv(1, params.q)
    else:
        u_q = partial_rl_deriv_2d(u, 1, params.q, scheme, n_workers)
    off_shell = (
        phi_p(2, field, u, params.p, scheme, n_workers)
        + u * phi_p(1, field, u, params.q, scheme, n_workers)
        + phi * u_q
        + phi_p(1, field, u, params.r, scheme, n_workers)
    )
    on_shell = on_shell_coefficients(field, params) if isinstance(field, ScalingField) else None
    defect = terminal_defect(field)
    if defect > TERMINAL_ATOL:
        logger.info("Field moves the lower terminal (defect %.3e); not a symmetry", defect)
    return DeterminingReport(off_shell=off_shell, on_shell=on_shell, terminal_defect=defect)
