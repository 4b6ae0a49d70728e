"""Exact-solution engine: gates, ground states, ladders, duality."""

from .duality import NoDualFactorization, dual_factorization, dual_ground_state
from .ground import KernelSearchError, ground_state_analytic, ground_state_numeric
from .isospectral import coulomb_references, isospectral_check, trig_references
from .ladder import (
    LadderProblem,
    SpectrumRow,
    SpectrumTable,
    admissible_levels,
    default_grid,
    energy_level,
    energy_levels,
    excited_state,
    hamiltonian_operator,
    level_label,
)
from .states import BoundState, GateRejection, check_gate, normalize_state, require_gate
from .verify import CheckResult, intertwining_residual, residual_grid, verify_kind

__all__ = [
    "BoundState",
    "GateRejection",
    "KernelSearchError",
    "LadderProblem",
    "NoDualFactorization",
    "SpectrumRow",
    "SpectrumTable",
    "admissible_levels",
    "check_gate",
    "coulomb_references",
    "default_grid",
    "dual_factorization",
    "dual_ground_state",
    "energy_level",
    "energy_levels",
    "excited_state",
    "ground_state_analytic",
    "ground_state_numeric",
    "hamiltonian_operator",
    "isospectral_check",
    "level_label",
    "normalize_state",
    "require_gate",
    "trig_references",
    "CheckResult",
    "intertwining_residual",
    "residual_grid",
    "verify_kind",
]
