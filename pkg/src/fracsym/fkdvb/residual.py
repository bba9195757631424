"""Residual R[u] = D^p_{x2} u + u D^q_{x1} u + D^r_{x1} u."""

from fracsym.exceptions import DomainError
from fracsym.fkdvb.params import FkdvbParams
from fracsym.fraccore.bivariate import BivariatePowerSum
from fracsym.fraccore.grid import GridFunction2D
from fracsym.frlnum.operators import partial_rl_deriv_2d
from fracsym.frlnum.schemes import SchemeKind


def residual(
    u: BivariatePowerSum | GridFunction2D,
    params: FkdvbParams,
    scheme: SchemeKind = SchemeKind.PRODUCT_TRAPEZOID,
    n_workers: int | None = None,
) -> BivariatePowerSum | GridFunction2D:
    """Exact on bivariate power sums, node-wise on grid functions."""
    if isinstance(u, BivariatePowerSum):
        return u.rl_deriv(2, params.p) + u * u.rl_deriv(1, params.q) + u.rl_deriv(1, params.r)
    if isinstance(u, GridFunction2D):
        return (
            partial_rl_deriv_2d(u, 2, params.p, scheme, n_workers)
            + u * partial_rl_deriv_2d(u, 1, params.q, scheme, n_workers)
            + partial_rl_deriv_2d(u, 1, params.r, scheme, n_workers)
        )
    raise DomainError(f"u must be a bivariate power sum or a 2D grid function, got {type(u).__name__}")
