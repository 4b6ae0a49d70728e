"""Position-dependent-mass systems: row catalog, transforms, spectra."""

from .families import FamilyFit, family_energy, fit_family
from .spectra import (
    direct_energies,
    direct_fit,
    effective_operator,
    item10_energy,
    numeric_energies,
    pdm_spectrum,
    two_step_energies,
)
from .tables import PDM_ROWS, SPECIAL_ROWS, PdmRow, get_row
from .transforms import (
    EffectiveProblem,
    RadialChannel,
    RadialProblem,
    TwoStepTransform,
    direct_transform,
    liouville_grid,
    radial_operator,
    radial_reduce,
    two_step_transform,
)

__all__ = [
    "EffectiveProblem",
    "FamilyFit",
    "PDM_ROWS",
    "PdmRow",
    "RadialChannel",
    "RadialProblem",
    "SPECIAL_ROWS",
    "TwoStepTransform",
    "direct_energies",
    "direct_fit",
    "direct_transform",
    "effective_operator",
    "family_energy",
    "fit_family",
    "get_row",
    "item10_energy",
    "liouville_grid",
    "numeric_energies",
    "pdm_spectrum",
    "radial_operator",
    "radial_reduce",
    "two_step_energies",
    "two_step_transform",
]
