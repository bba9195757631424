"""EK operators on either a power sum (exact) or a callable (quadrature)."""

from collections.abc import Callable

import numpy as np

from fracsym.ekober.exact import EKResult, ek_diff_gp, ek_integral_gp
from fracsym.ekober.params import EKParams
from fracsym.ekober.quadrature import DEFAULT_NODES, ek_diff_quad, ek_integral_quad
from fracsym.exceptions import DomainError
from fracsym.fraccore.polynomial import GeneralizedPolynomial


def _check_callable(f, y) -> None:
    if not callable(f):
        raise DomainError(f"EK operators act on power sums or callables, got {type(f).__name__}")
    if y is None:
        raise DomainError("evaluation points are required for a callable argument")


def ek_integral(
    f: GeneralizedPolynomial | Callable[[np.ndarray], np.ndarray],
    params: EKParams,
    y: np.ndarray | float | None = None,
    *,
    growth: float = 0.0,
    nodes: int = DEFAULT_NODES,
    continuation: bool = False,
) -> EKResult | np.ndarray:
    """K^{c,a}_b f: exact EKResult for a power sum, samples at y for a callable."""
    if isinstance(f, GeneralizedPolynomial):
        return ek_integral_gp(f, params, continuation)
    _check_callable(f, y)
    return ek_integral_quad(f, params, y, growth, nodes)


def ek_diff(
    f: GeneralizedPolynomial | Callable[[np.ndarray], np.ndarray],
    params: EKParams,
    y: np.ndarray | float | None = None,
    *,
    growth: float = 0.0,
    nodes: int = DEFAULT_NODES,
    continuation: bool = False,
) -> EKResult | np.ndarray:
    """D^{c,a}_b f: exact EKResult for a power sum, samples at y for a callable."""
    if isinstance(f, GeneralizedPolynomial):
        return ek_diff_gp(f, params, continuation)
    _check_callable(f, y)
    return ek_diff_quad(f, params, y, growth, nodes)
