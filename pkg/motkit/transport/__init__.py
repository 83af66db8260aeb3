from motkit.transport.convex_order import check_convex_order, potential_function_check
from motkit.transport.couplings import (
    coupling_as_measure,
    coupling_cost,
    coupling_marginals,
    coupling_tv_distance,
    identity_coupling,
    is_martingale_coupling,
    project_coupling,
    transports_along_lines,
)
from motkit.transport.mot import min_mass_within, mot_program, mot_value
from motkit.transport.ot import ot_program, ot_value
from motkit.transport.uniqueness import UniquenessResult, uniqueness_probe

__all__ = [
    "UniquenessResult",
    "check_convex_order",
    "coupling_as_measure",
    "coupling_cost",
    "coupling_marginals",
    "coupling_tv_distance",
    "identity_coupling",
    "is_martingale_coupling",
    "min_mass_within",
    "mot_program",
    "mot_value",
    "ot_program",
    "ot_value",
    "potential_function_check",
    "project_coupling",
    "transports_along_lines",
    "uniqueness_probe",
]
