import logging
import math

import numpy as np

from bck_net.analytic import expected_aged_kill_count, hitting_survival
from bck_net.core import ConfigurationError, Estimator, LatticeBox
from bck_net.dual import aged_kill_points
from bck_net.simulation.runner import ReplicateRunner, default_runner
from bck_net.walkers import ScaledConfig

from .estimate import Estimate

__all__: list[str] = [
    "estimate_kill_intensity",
    "KillIntensityEstimator",
    "lattice_box",
]

logger = logging.getLogger(__name__)

UNIT_BOX: tuple[float, float, float, float] = (0.0, 1.0, 0.0, 1.0)


def lattice_box(
    cfg: ScaledConfig, box_macro: tuple[float, float, float, float]
) -> LatticeBox:
    """Lattice sites of the macroscopic box [x0, x1) x [t0, t1)."""
    x0, x1, t0, t1 = box_macro
    if not (x1 > x0 and t1 > t0):
        raise ConfigurationError(f"box must have positive area, got {box_macro}")
    xl = math.floor(x0 * cfg.length_unit + 0.5)
    xh = max(xl + 1, math.floor(x1 * cfg.length_unit + 0.5))
    tl = math.floor(t0 * cfg.time_unit + 0.5)
    th = max(tl + 1, math.floor(t1 * cfg.time_unit + 0.5))
    return LatticeBox(xl, xh - 1, tl, th - 1)


def estimate_kill_intensity(
    cfg: ScaledConfig,
    box_macro: tuple[float, float, float, float] = UNIT_BOX,
    eps_macro: float = 1.0,
    reps: int = 100,
    seed: int = 0,
    runner: ReplicateRunner | None = None,
) -> Estimate:
    """Number of killing points of age >= eps inside a macroscopic box.

    The count is scaled by (area e^3beta / 2) / #even sites of the lattice box,
    the ratio of the ideal to the actual number of sites.
    """
    if eps_macro <= 0:
        raise ConfigurationError(f"eps must be > 0, got {eps_macro}")
    cfg = cfg.for_reference_net()
    runner = default_runner(runner)

    box = lattice_box(cfg, box_macro)
    eps_steps = cfg.lattice_time(eps_macro)
    x0, x1, t0, t1 = box_macro
    area = (x1 - x0) * (t1 - t0)
    ideal_sites = area * cfg.length_unit * cfg.time_unit / 2.0
    n_sites = box.n_even_sites
    if n_sites == 0:
        raise ConfigurationError(
            f"box {box} holds no even lattice sites; enlarge it or raise beta"
        )
    scale = ideal_sites / n_sites
    logger.info(
        f"kill-intensity: box {box}, {n_sites} sites, eps={eps_steps} steps, "
        f"{reps} replicates [{cfg.describe()}]"
    )

    def replicate(r: int) -> float:
        field = cfg.field_for(seed, r)
        return len(aged_kill_points(field, box, eps_steps, eps_steps)) * scale

    samples = np.array(runner.map(replicate, reps))
    eps_used = cfg.macro_time(eps_steps)
    reference = expected_aged_kill_count(cfg.k, area, cfg.b, eps_used)
    survival = hitting_survival(cfg.b_site, eps_steps)
    lattice_reference = cfg.k_site * ideal_sites * survival
    return Estimate.from_samples(
        "kill_intensity",
        samples,
        reference,
        lattice_reference,
        notes=(
            f"box={box.x_lo}..{box.x_hi}x{box.t_lo}..{box.t_hi} "
            f"eps_steps={eps_steps}"
        ),
        extras={"eps": eps_used},
    )


class KillIntensityEstimator(Estimator):
    """Mean number of aged killing points in the unit box [0, L] x [0, t]."""

    def __init__(self):
        super().__init__(self.get_name())

    @classmethod
    def get_name(cls) -> str:
        return "kill-intensity"

    @classmethod
    def get_default_parameters(cls):
        return {
            "t": {
                "type": "float",
                "label": "Box height (macroscopic time)",
                "min": 0.0,
            },
            "L": {"type": "float", "label": "Box width", "min": 0.0},
            "eps": {"type": "float", "label": "Minimum age", "min": 0.0},
        }

    def run(self, config, runner):
        box = (0.0, config.L, 0.0, config.t)
        return [
            estimate_kill_intensity(
                config.scaled, box, config.eps, config.reps, config.seed, runner
            )
        ]
