from fracsym.ekober.exact import EKResult, ek_diff_gp, ek_integral_gp
from fracsym.ekober.identities import (
    compose_similarity,
    ek_reduction_identity_check,
    scale_relation_check,
)
from fracsym.ekober.operators import ek_diff, ek_integral
from fracsym.ekober.params import EKParams
from fracsym.ekober.quadrature import ek_diff_quad, ek_integral_quad

__all__ = [
    "EKParams",
    "EKResult",
    "compose_similarity",
    "ek_diff",
    "ek_diff_gp",
    "ek_diff_quad",
    "ek_integral",
    "ek_integral_gp",
    "ek_integral_quad",
    "ek_reduction_identity_check",
    "scale_relation_check",
]
