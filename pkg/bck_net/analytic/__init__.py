__all__: list[str] = [
    "DensityParams",
    "normal_cdf",
    "xi_density",
    "expected_aged_kill_count",
    "wedge_step_probabilities",
    "hitting_survival",
    "hitting_survival_profile",
    "hitting_mass_defects",
    "lattice_density",
]

from .formulas import DensityParams, expected_aged_kill_count, normal_cdf, xi_density
from .hitting import (
    hitting_mass_defects,
    hitting_survival,
    hitting_survival_profile,
    lattice_density,
    wedge_step_probabilities,
)
