"""Numerical RL integrals and derivatives on uniform grids.

The derivative follows the RL composition: the order-([p]+1-p) integral by
product-trapezoid quadrature, then [p]+1 second-order finite differences.
Finite differences use one-sided stencils at the ends; the nodes they reach
are flagged in ``reduced_accuracy``.
"""

import numpy as np

from fracsym.exceptions import DomainError, GridSizeError
from fracsym.executor import LineExecutor
from fracsym.fraccore.bivariate import check_axis
from fracsym.fraccore.grid import GridFunction1D, GridFunction2D, UniformGrid1D
from fracsym.frlnum.schemes import (
    FracOrder,
    SchemeKind,
    as_order,
    grunwald_letnikov_weights,
    product_trapezoid_weights,
)
from fracsym.utils.logging import setup_logger

logger = setup_logger(__name__)


def _check_size(grid: UniformGrid1D, order: FracOrder, scheme: SchemeKind) -> None:
    if scheme is SchemeKind.PRODUCT_TRAPEZOID:
        needed = 2 * order.stencil + 2
        if grid.count < needed:
            raise GridSizeError(
                f"order {order.p} needs at least {needed} nodes for the finite-difference "
                f"stencil, got {grid.count}"
            )


def _integral_line(values: np.ndarray, step: float, mu: float) -> np.ndarray:
    return step**mu * (product_trapezoid_weights(mu, values.shape[0]) @ values)


def _derivative_line(values: np.ndarray, step: float, order: FracOrder, scheme: SchemeKind) -> np.ndarray:
    if order.p == 0:
        return values.copy()
    if scheme is SchemeKind.GRUNWALD_LETNIKOV:
        return step ** (-order.p) * (grunwald_letnikov_weights(order.p, values.shape[0]) @ values)
    m = order.stencil
    out = values if order.is_integer else _integral_line(values, step, m - order.p)
    for _ in range(m):
        out = np.gradient(out, step, edge_order=2)
    return out


def _derivative_flags(n: int, order: FracOrder, scheme: SchemeKind) -> np.ndarray:
    flags = np.zeros(n, dtype=bool)
    if order.p == 0:
        return flags
    if scheme is SchemeKind.GRUNWALD_LETNIKOV:
        flags[0] = True
        return flags
    m = order.stencil
    flags[:m] = True
    flags[n - m :] = True
    return flags


def rl_integral_num(f: GridFunction1D, p: "float | FracOrder") -> GridFunction1D:
    """I^p f on the nodes of f's grid, lower terminal at the grid terminal; node 0 is 0."""
    order = as_order(p)
    if order.p == 0:
        raise DomainError("integral order must be positive, got 0")
    return f.with_samples(_integral_line(np.asarray(f.samples), f.grid.step, order.p))


def rl_deriv_num(
    f: GridFunction1D,
    p: "float | FracOrder",
    scheme: SchemeKind = SchemeKind.PRODUCT_TRAPEZOID,
) -> GridFunction1D:
    """D^p f; integer orders reduce to repeated finite differences."""
    order = as_order(p)
    scheme = SchemeKind(scheme)
    _check_size(f.grid, order, scheme)
    logger.debug("RL derivative of order %s on %s nodes (%s)", order.p, f.grid.count, scheme.value)
    values = _derivative_line(np.asarray(f.samples), f.grid.step, order, scheme)
    flags = _derivative_flags(f.grid.count, order, scheme) | f.reduced_accuracy
    return f.with_samples(values, flags)


def total_rl_deriv(
    fvals: GridFunction1D,
    p: "float | FracOrder",
    scheme: SchemeKind = SchemeKind.PRODUCT_TRAPEZOID,
) -> GridFunction1D:
    """Total derivative of tau -> f(tau, g(tau)); the caller supplies the composed samples."""
    return rl_deriv_num(fvals, p, scheme)


def sequential_deriv(
    f: GridFunction1D,
    p: "float | FracOrder",
    q: "float | FracOrder",
    scheme: SchemeKind = SchemeKind.PRODUCT_TRAPEZOID,
) -> GridFunction1D:
    """D^q (D^p f): order p is applied first."""
    return rl_deriv_num(rl_deriv_num(f, p, scheme), q, scheme)


def _axis_grid(u: GridFunction2D, axis: int) -> tuple[UniformGrid1D, int]:
    check_axis(axis)
    # samples are (n2, n1): x1 runs along numpy axis 1
    return (u.grid1, 1) if axis == 1 else (u.grid2, 0)


def _axis_flags(u: GridFunction2D, axis: int, line_flags: np.ndarray) -> np.ndarray:
    spread = line_flags[np.newaxis, :] if axis == 1 else line_flags[:, np.newaxis]
    return np.broadcast_to(spread, u.shape) | u.reduced_accuracy


def partial_rl_deriv_2d(
    u: GridFunction2D,
    axis: int,
    p: "float | FracOrder",
    scheme: SchemeKind = SchemeKind.PRODUCT_TRAPEZOID,
    n_workers: int | None = None,
) -> GridFunction2D:
    """Partial RL derivative in x_axis, applied independently along every grid line."""
    order = as_order(p)
    scheme = SchemeKind(scheme)
    grid, np_axis = _axis_grid(u, axis)
    _check_size(grid, order, scheme)

    def kernel(line: np.ndarray) -> np.ndarray:
        return _derivative_line(line, grid.step, order, scheme)

    values = LineExecutor(n_workers).map_lines(kernel, u.samples, axis=np_axis)
    return u.with_samples(values, _axis_flags(u, axis, _derivative_flags(grid.count, order, scheme)))


def partial_rl_integral_2d(
    u: GridFunction2D, axis: int, p: "float | FracOrder", n_workers: int | None = None
) -> GridFunction2D:
    order = as_order(p)
    if order.p == 0:
        raise DomainError("integral order must be positive, got 0")
    grid, np_axis = _axis_grid(u, axis)

    def kernel(line: np.ndarray) -> np.ndarray:
        return _integral_line(line, grid.step, order.p)

    values = LineExecutor(n_workers).map_lines(kernel, u.samples, axis=np_axis)
    return u.with_samples(values, u.reduced_accuracy)


def partial_classical_2d(u: GridFunction2D, axis: int) -> GridFunction2D:
    """First classical partial derivative in x_axis by second-order differences."""
    grid, np_axis = _axis_grid(u, axis)
    if grid.count < 3:
        raise GridSizeError(f"a classical derivative needs at least 3 nodes, got {grid.count}")
    values = np.gradient(u.samples, grid.step, axis=np_axis, edge_order=2)
    flags = np.zeros(grid.count, dtype=bool)
    flags[[0, -1]] = True
    return u.with_samples(values, _axis_flags(u, axis, flags))


def mixed_deriv_both_orders(
    u: GridFunction2D,
    p: "float | FracOrder",
    q: "float | FracOrder",
    m: int = 1,
    scheme: SchemeKind = SchemeKind.PRODUCT_TRAPEZOID,
    n_workers: int | None = None,
) -> tuple[GridFunction2D, GridFunction2D]:
    """(D^p_m D^q_{3-m} u, D^q_{3-m} D^p_m u): both orderings of the mixed derivative."""
    other = 3 - check_axis(m)
    inner_first = partial_rl_deriv_2d(
        partial_rl_deriv_2d(u, other, q, scheme, n_workers), m, p, scheme, n_workers
    )
    outer_first = partial_rl_deriv_2d(
        partial_rl_deriv_2d(u, m, p, scheme, n_workers), other, q, scheme, n_workers
    )
    return inner_first, outer_first
