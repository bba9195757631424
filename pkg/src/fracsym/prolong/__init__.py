from fracsym.prolong.coefficients import (
    phi_p,
    phi_p_closed_form,
    phi_p_series,
    phi_pq_closed_form,
    phi_pq_mixed,
    scaling_factor,
)
from fracsym.prolong.determining import (
    DeterminingReport,
    determining_eval,
    on_shell_coefficients,
    terminal_defect,
)
from fracsym.prolong.fields import MixedOrderSpec, PowerSumField, SampledField, ScalingField
from fracsym.prolong.oracle import group_deformation_oracle

__all__ = [
    "DeterminingReport",
    "MixedOrderSpec",
    "PowerSumField",
    "SampledField",
    "ScalingField",
    "determining_eval",
    "group_deformation_oracle",
    "on_shell_coefficients",
    "phi_p",
    "phi_p_closed_form",
    "phi_p_series",
    "phi_pq_closed_form",
    "phi_pq_mixed",
    "scaling_factor",
    "terminal_defect",
]
