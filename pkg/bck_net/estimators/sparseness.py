import logging
import math

import numpy as np

from bck_net.core import ConfigurationError, Estimator
from bck_net.simulation.runner import ReplicateRunner, default_runner
from bck_net.walkers import ScaledConfig

from .estimate import Estimate
from .killing_times import feasible_config, first_killing_time

__all__: list[str] = ["min_spacing", "estimate_sparseness", "SparsenessEstimator"]

logger = logging.getLogger(__name__)

DEFAULT_EPS_GRID: tuple[float, ...] = (0.01, 0.05, 0.1, 0.2)


def min_spacing(points: np.ndarray, beta: float) -> float:
    """Smallest gap between points in macroscopic units, inf for fewer than two."""
    if points.size < 2:
        return math.inf
    return float(np.diff(points).min()) * math.exp(-beta)


def estimate_sparseness(
    cfg: ScaledConfig,
    l_macro: float,
    reps: int,
    eps_grid=DEFAULT_EPS_GRID,
    t_cap_macro: float = 4.0,
    seed: int = 0,
    runner: ReplicateRunner | None = None,
) -> list[Estimate]:
    """P(D < eps) for each eps, where D is the smallest spacing of the
    full-line point set in [-L, L] at its first killing time.

    Censored replicates (no hit before T_cap) have D = inf.

    Raises:
        ConfigurationError: k = 0, where the killing time never occurs
    """
    if cfg.k <= 0:
        raise ConfigurationError(
            "sparseness needs k > 0: without killing the hit time is undefined"
        )
    if l_macro <= 0:
        raise ConfigurationError(f"L must be > 0, got {l_macro}")
    eps_grid = sorted(float(e) for e in eps_grid)
    cfg = feasible_config(cfg.for_reference_net(), l_macro, t_cap_macro)
    runner = default_runner(runner)
    half = cfg.lattice_length(l_macro)
    horizon = cfg.lattice_time(t_cap_macro)
    logger.info(f"sparseness: half-width {half}, horizon {horizon}, {reps} replicates")

    def replicate(r: int) -> float:
        hit = first_killing_time(cfg.field_for(seed, r), half, 0, horizon)
        return min_spacing(hit.points, cfg.beta)

    spacings = np.array(runner.map(replicate, reps))
    censored = float(np.mean(np.isinf(spacings)))
    return [
        Estimate.from_samples(
            f"P(D<{eps:g})",
            (spacings < eps).astype(np.float64),
            notes=f"half_width={half} horizon={horizon} beta={cfg.beta:g}",
            extras={"eps": eps, "no_pair_fraction": censored},
        )
        for eps in eps_grid
    ]


class SparsenessEstimator(Estimator):
    """Smallest point spacing at the first killing time."""

    def __init__(self):
        super().__init__(self.get_name())

    @classmethod
    def get_name(cls) -> str:
        return "sparseness"

    @classmethod
    def get_default_parameters(cls):
        return {
            "L": {"type": "float", "label": "Half-width of the window", "min": 0.0},
            "t": {"type": "float", "label": "Censoring time", "min": 0.0},
            "eps_grid": {"type": "float_list", "label": "Spacing thresholds"},
        }

    def run(self, config, runner):
        return estimate_sparseness(
            config.scaled,
            config.L,
            config.reps,
            config.eps_grid or DEFAULT_EPS_GRID,
            config.t,
            config.seed,
            runner,
        )
