"""Prolongation coefficients of a point field for RL derivatives with terminal 0.

The six-term formulas are written once against a small operator set and run
either exactly on bivariate power sums or numerically on grid functions.
"""

from dataclasses import dataclass

import numpy as np

from fracsym.exceptions import DomainError, UnsupportedFieldError
from fracsym.fraccore.bivariate import BivariatePowerSum, check_axis
from fracsym.fraccore.gamma import binomial
from fracsym.fraccore.grid import GridFunction2D, mesh
from fracsym.frlnum.operators import partial_classical_2d, partial_rl_deriv_2d
from fracsym.frlnum.schemes import SchemeKind
from fracsym.prolong.fields import Field, MixedOrderSpec, SampledField, ScalingField
from fracsym.utils.logging import setup_logger

logger = setup_logger(__name__)

DEFAULT_SERIES_TERMS = 8


class _ExactOps:
    def deriv(self, f: BivariatePowerSum, axis: int, order: float) -> BivariatePowerSum:
        return f.rl_deriv(axis, order)

    def partial(self, f: BivariatePowerSum, axis: int) -> BivariatePowerSum:
        return f.partial(axis)


@dataclass(frozen=True)
class _GridOps:
    scheme: SchemeKind
    n_workers: int | None

    def deriv(self, f: GridFunction2D, axis: int, order: float) -> GridFunction2D:
        return partial_rl_deriv_2d(f, axis, order, self.scheme, self.n_workers)

    def partial(self, f: GridFunction2D, axis: int) -> GridFunction2D:
        return partial_classical_2d(f, axis)


def resolve_field(field: Field, u, scheme: SchemeKind, n_workers: int | None):
    """Operator set, {axis: xi} and phi along u, all in the representation of u."""
    if isinstance(u, BivariatePowerSum):
        if isinstance(field, SampledField):
            raise DomainError("a sampled field needs u sampled on the same grid")
        psf = field.as_power_sum_field() if isinstance(field, ScalingField) else field
        return _ExactOps(), {1: psf.xi1, 2: psf.xi2}, psf.phi(u)
    if not isinstance(u, GridFunction2D):
        raise DomainError(f"u must be a bivariate power sum or a 2D grid function, got {type(u).__name__}")
    ops = _GridOps(SchemeKind(scheme), n_workers)
    if isinstance(field, SampledField):
        field.check_grid(u)
        return ops, {1: field.xi1, 2: field.xi2}, field.phi
    x1, x2 = mesh(u.grid1, u.grid2)
    if isinstance(field, ScalingField):
        xi = {1: u.with_samples(field.c1 * x1), 2: u.with_samples(field.c2 * x2)}
        return ops, xi, u * field.cu
    xi = {1: u.with_samples(field.xi1(x1, x2)), 2: u.with_samples(field.xi2(x1, x2))}
    return ops, xi, u * field.cu + u.with_samples(np.broadcast_to(field.phi0(x1, x2), u.shape))


def scaling_factor(field: ScalingField, m: int, p: float) -> float:
    """cu - p * c_m, the factor of D^p_m u in phi^p_m for a scaling field."""
    return field.cu - p * field.coefficient(m)


def phi_p(
    m: int,
    field: Field,
    u: BivariatePowerSum | GridFunction2D,
    p: float,
    scheme: SchemeKind = SchemeKind.PRODUCT_TRAPEZOID,
    n_workers: int | None = None,
):
    """phi^p_m = D^p phi + D^p(u D_m xi^m) - D^{p+1}(xi^m u) + xi^m D^{p+1} u
    + xi^o D^p d_o u - D^p(xi^o d_o u), with o = 3 - m and every D^. taken in x_m.

    Exact for power sums, node-wise for grid functions.
    """
    check_axis(m)
    o = 3 - m
    ops, xi, phi = resolve_field(field, u, scheme, n_workers)
    du_o = ops.partial(u, o)
    return (
        ops.deriv(phi, m, p)
        + ops.deriv(u * ops.partial(xi[m], m), m, p)
        - ops.deriv(xi[m] * u, m, p + 1)
        + xi[m] * ops.deriv(u, m, p + 1)
        + xi[o] * ops.deriv(du_o, m, p)
        - ops.deriv(xi[o] * du_o, m, p)
    )


def phi_p_closed_form(m: int, field: ScalingField, u: BivariatePowerSum, p: float) -> BivariatePowerSum:
    """(cu - p c_m) D^p_m u: phi^p_m of a scaling field."""
    return u.rl_deriv(m, p) * scaling_factor(field, m, p)


def _order_shift(u: BivariatePowerSum, m: int, order: float) -> BivariatePowerSum:
    """D^order_m u, read as an RL integral for negative order."""
    if order >= 0:
        return u.rl_deriv(m, order)
    return u.rl_integral(m, -order)


def phi_p_series(
    m: int,
    field: ScalingField,
    u: BivariatePowerSum,
    p: float,
    terms: int = DEFAULT_SERIES_TERMS,
) -> BivariatePowerSum:
    """phi^p_m from the terminal-0 series, truncated after `terms` summands.

    d^p phi/dx_m^p is taken with u held fixed, so for phi = cu u it cancels
    against u d^p(d_u phi)/dx_m^p. The quadruple sum carries d^k phi/du^k with
    k >= 2 and vanishes for fields linear in u; its Gamma factor is
    Gamma(n + 1 - p).
    """
    if not isinstance(field, ScalingField):
        raise UnsupportedFieldError(
            f"the series form is only evaluated for scaling fields, got {type(field).__name__}"
        )
    if not isinstance(u, BivariatePowerSum):
        raise DomainError("the series form is exact: u must be a bivariate power sum")
    check_axis(m)
    o = 3 - m
    psf = field.as_power_sum_field()
    phi_u = BivariatePowerSum.monomial(0.0, 0.0, psf.cu)
    frac_phi_u = phi_u.rl_deriv(m, p)

    result = psf.phi0.rl_deriv(m, p) + u * frac_phi_u
    result = result + u.rl_deriv(m, p) * (phi_u - psf.xi(m).partial(m) * p)
    result = result - u * frac_phi_u

    dn_phi_u, dn1_xi_m, dn_xi_o = phi_u, psf.xi(m).partial(m), psf.xi(o)
    for n in range(1, terms + 1):
        dn_phi_u = dn_phi_u.partial(m)
        dn1_xi_m = dn1_xi_m.partial(m)
        dn_xi_o = dn_xi_o.partial(m)
        a_n = dn_phi_u * binomial(p, n) - dn1_xi_m * binomial(p, n + 1)
        b_n = dn_xi_o * binomial(p, n)
        if not a_n.is_zero:
            result = result + a_n * _order_shift(u, m, p - n)
        if not b_n.is_zero:
            result = result - b_n * _order_shift(u, m, p - n).partial(o)
    logger.debug("Series prolongation summed %s terms on axis %s", terms, m)
    return result


def phi_pq_mixed(
    spec: MixedOrderSpec,
    field: Field,
    u: BivariatePowerSum | GridFunction2D,
    scheme: SchemeKind = SchemeKind.PRODUCT_TRAPEZOID,
    n_workers: int | None = None,
):
    """phi^{p,q}_{m,o} for D^{p,q} = D^p_m D^q_o with terminal 0:

    D^{p,q}(phi - sum_i xi^i d_i u) + sum_i xi^i d_i D^{p,q} u + D^{p,q} D_o(xi^o u)
    + D^p_m D_m(xi^m D^q_o u) - D^{p,q+1}(xi^o u) - D^{p+1}_m(xi^m D^q_o u).
    """
    m, o, p, q = spec.m, spec.other, spec.p, spec.q
    ops, xi, phi = resolve_field(field, u, scheme, n_workers)

    def d_pq(f, inner_order: float = q):
        return ops.deriv(ops.deriv(f, o, inner_order), m, p)

    du = {1: ops.partial(u, 1), 2: ops.partial(u, 2)}
    dpq_u = d_pq(u)
    dq_u = ops.deriv(u, o, q)
    return (
        d_pq(phi - xi[1] * du[1] - xi[2] * du[2])
        + xi[1] * ops.partial(dpq_u, 1)
        + xi[2] * ops.partial(dpq_u, 2)
        + d_pq(ops.partial(xi[o] * u, o))
        + ops.deriv(ops.partial(xi[m] * dq_u, m), m, p)
        - d_pq(xi[o] * u, q + 1)
        - ops.deriv(xi[m] * dq_u, m, p + 1)
    )


def phi_pq_closed_form(spec: MixedOrderSpec, field: ScalingField, u: BivariatePowerSum) -> BivariatePowerSum:
    """(cu - p c_m - q c_o) D^p_m D^q_o u: the mixed coefficient of a scaling field."""
    factor = field.cu - spec.p * field.coefficient(spec.m) - spec.q * field.coefficient(spec.other)
    return u.rl_deriv(spec.other, spec.q).rl_deriv(spec.m, spec.p) * factor
