import logging

import numpy as np

from bck_net.analytic import DensityParams, hitting_survival, xi_density
from bck_net.core import ConfigurationError, Estimator, Window, parity_sites
from bck_net.simulation.runner import ReplicateRunner, default_runner
from bck_net.walkers import ScaledConfig, bc_point_set

from .constants import MAX_CONE_WIDTH
from .estimate import Estimate

__all__: list[str] = ["estimate_density", "DensityEstimator"]

logger = logging.getLogger(__name__)


def estimate_density(
    cfg: ScaledConfig,
    t_macro: float,
    l_macro: float,
    reps: int,
    seed: int = 0,
    runner: ReplicateRunner | None = None,
) -> Estimate:
    """Points of the killing-free point set started from the full line at time 0,
    counted at time t in [-L, L] (macroscopic units).

    The count is scaled by L e^beta / #sites so that one unit of the result
    is one point per macroscopic half-window; its continuum reference is
    2 L xi_density(b, tau) with tau the lattice time actually used.
    """
    if t_macro < 0:
        raise ConfigurationError(f"t must be >= 0, got {t_macro}")
    if l_macro <= 0:
        raise ConfigurationError(f"L must be > 0, got {l_macro}")
    cfg = cfg.for_reference_net()
    runner = default_runner(runner)

    half = max(2, cfg.lattice_length(l_macro))
    steps = cfg.lattice_time(t_macro)
    if 2 * (half + steps) > MAX_CONE_WIDTH:
        raise ConfigurationError(
            f"window of {2 * (half + steps)} sites needed at beta={cfg.beta}; "
            "choose a smaller beta"
        )
    window = Window(-half, half, buffer=steps)
    n_sites = parity_sites(-half, half, steps).size
    scale = l_macro * cfg.length_unit / n_sites
    logger.info(
        f"density: half-width {half}, {steps} steps, {n_sites} sites, "
        f"{reps} replicates [{cfg.describe()}]"
    )

    def replicate(r: int) -> float:
        field = cfg.field_for(seed, r)
        return len(bc_point_set(field, 0, steps, window, killing=False)) * scale

    samples = np.array(runner.map(replicate, reps))
    notes = f"half_width={half} steps={steps} sites={n_sites}"

    if steps == 0:
        return Estimate.from_samples(
            "density", samples, None, l_macro * cfg.length_unit, notes=notes
        )
    tau = cfg.macro_time(steps)
    reference = 2.0 * l_macro * xi_density(DensityParams(cfg.b, tau))
    lattice_reference = l_macro * cfg.length_unit * hitting_survival(cfg.b_site, steps)
    return Estimate.from_samples(
        "density",
        samples,
        reference,
        lattice_reference,
        notes=notes,
        extras={"tau": tau, "lattice_density": 0.5 * lattice_reference / l_macro},
    )


class DensityEstimator(Estimator):
    """Density of the branching-coalescing point set started from the full line."""

    def __init__(self):
        super().__init__(self.get_name())

    @classmethod
    def get_name(cls) -> str:
        return "density"

    @classmethod
    def get_default_parameters(cls):
        return {
            "t": {"type": "float", "label": "Macroscopic time", "min": 0.0},
            "L": {
                "type": "float",
                "label": "Half-width of the counting window",
                "min": 0.0,
            },
        }

    def run(self, config, runner):
        return [
            estimate_density(
                config.scaled, config.t, config.L, config.reps, config.seed, runner
            )
        ]
