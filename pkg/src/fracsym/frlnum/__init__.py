from fracsym.frlnum.norms import WindowErrors, evaluation_mask, observed_order, window_errors
from fracsym.frlnum.operators import (
    mixed_deriv_both_orders,
    partial_classical_2d,
    partial_rl_deriv_2d,
    partial_rl_integral_2d,
    rl_deriv_num,
    rl_integral_num,
    sequential_deriv,
    total_rl_deriv,
)
from fracsym.frlnum.schemes import (
    FracOrder,
    SchemeKind,
    as_order,
    grunwald_letnikov_weights,
    product_trapezoid_weights,
)

__all__ = [
    "FracOrder",
    "SchemeKind",
    "WindowErrors",
    "as_order",
    "evaluation_mask",
    "grunwald_letnikov_weights",
    "mixed_deriv_both_orders",
    "observed_order",
    "partial_classical_2d",
    "partial_rl_deriv_2d",
    "partial_rl_integral_2d",
    "product_trapezoid_weights",
    "rl_deriv_num",
    "rl_integral_num",
    "sequential_deriv",
    "total_rl_deriv",
    "window_errors",
]
