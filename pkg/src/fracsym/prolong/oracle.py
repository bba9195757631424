"""Prolongation coefficients straight from their definition.

For a scaling field the group acts in closed form,
u~(x~) = exp(eps cu) u(exp(-eps c1) x~1, exp(-eps c2) x~2),
and the coefficient is the eps-derivative at 0 of the transformed fractional
derivative, read at the image point x~ = g_eps x of a fixed x.
"""

import math

import numpy as np

from fracsym.fraccore.bivariate import BivariatePowerSum
from fracsym.fraccore.compare import probe_points
from fracsym.prolong.fields import MixedOrderSpec, ScalingField

DEFAULT_EPS = 1e-4


def _transformed_derivative(
    field: ScalingField,
    u: BivariatePowerSum,
    order: float | MixedOrderSpec,
    m: int,
    eps: float,
    x1: np.ndarray,
    x2: np.ndarray,
) -> np.ndarray:
    moved = u.scale_arguments(math.exp(-eps * field.c1), math.exp(-eps * field.c2)) * math.exp(eps * field.cu)
    if isinstance(order, MixedOrderSpec):
        derived = moved.rl_deriv(order.other, order.q).rl_deriv(order.m, order.p)
    else:
        derived = moved.rl_deriv(m, order)
    return np.asarray(derived.evaluate(math.exp(eps * field.c1) * x1, math.exp(eps * field.c2) * x2))


def _central_difference(field, u, order, m, eps, x1, x2) -> np.ndarray:
    ahead = _transformed_derivative(field, u, order, m, eps, x1, x2)
    behind = _transformed_derivative(field, u, order, m, -eps, x1, x2)
    return (ahead - behind) / (2.0 * eps)


def group_deformation_oracle(
    field: ScalingField,
    u: BivariatePowerSum,
    order: float | MixedOrderSpec,
    m: int = 1,
    eps: float = DEFAULT_EPS,
    points: tuple[np.ndarray, np.ndarray] | None = None,
    richardson: bool = True,
) -> np.ndarray:
    """d/d eps of D^order u~ at x~ = g_eps x, by central differences in eps.

    `order` is a single order on axis m or a MixedOrderSpec. One Richardson
    step combines the steps eps and eps/2.
    """
    x1, x2 = probe_points() if points is None else points
    coarse = _central_difference(field, u, order, m, eps, x1, x2)
    if not richardson:
        return coarse
    fine = _central_difference(field, u, order, m, eps / 2.0, x1, x2)
    return (4.0 * fine - coarse) / 3.0
