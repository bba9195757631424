from fracsym.fkdvb.params import Branch, FkdvbParams
from fracsym.fkdvb.residual import residual
from fracsym.fkdvb.symmetry import (
    EquivarianceReport,
    Invariants,
    ScalingGenerator,
    equivariance_check,
    flow_invariance_defect,
    group_action,
    invariants,
    residual_flow_derivative,
    solve_scaling,
)

__all__ = [
    "Branch",
    "EquivarianceReport",
    "FkdvbParams",
    "Invariants",
    "ScalingGenerator",
    "equivariance_check",
    "flow_invariance_defect",
    "group_action",
    "invariants",
    "residual",
    "residual_flow_derivative",
    "solve_scaling",
]
