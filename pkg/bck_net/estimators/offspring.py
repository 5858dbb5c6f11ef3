import logging

import numpy as np

from bck_net.core import ConfigurationError, Estimator
from bck_net.simulation.runner import ReplicateRunner, default_runner
from bck_net.walkers import PointSet, ScaledConfig, evolve

from .estimate import Estimate

__all__: list[str] = ["offspring_mean", "extinction_sweep", "OffspringEstimator"]

logger = logging.getLogger(__name__)


def offspring_mean(
    cfg: ScaledConfig,
    reps: int,
    seed: int = 0,
    runner: ReplicateRunner | None = None,
    t_macro: float = 1.0,
) -> Estimate:
    """Mean size of the killed point set started from (0, 0) after one time unit.

    The whole light cone is simulated, so there is no truncation error. The
    size is the offspring law of the Galton-Watson process that bounds the
    net from above.
    """
    runner = default_runner(runner)
    steps = cfg.lattice_time(t_macro)

    def replicate(r: int) -> int:
        field = cfg.field_for(seed, r)
        return len(evolve(field, PointSet.single(0, 0), steps, killing=True))

    samples = np.array(runner.map(replicate, reps), dtype=np.float64)
    return Estimate.from_samples(
        f"offspring_mean[k={cfg.k:g}]",
        samples,
        notes=f"steps={steps} beta={cfg.beta:g}",
        extras={"k": cfg.k, "extinct_fraction": float(np.mean(samples == 0))},
    )


def extinction_sweep(
    cfg: ScaledConfig,
    k_grid,
    reps: int,
    seed: int = 0,
    runner: ReplicateRunner | None = None,
    t_macro: float = 1.0,
) -> tuple[float | None, list[Estimate]]:
    """Scan k upward for the first value whose offspring mean is certainly below 1.

    Returns:
        (first k with mean + 3 s.e. < 1, or None; the estimates computed so far)
    """
    grid = sorted(float(k) for k in k_grid)
    if not grid:
        raise ConfigurationError("k_grid must not be empty")
    estimates = []
    for k in grid:
        estimate = offspring_mean(cfg.with_k(k), reps, seed, runner, t_macro)
        estimates.append(estimate)
        logger.info(f"extinction sweep: {estimate}")
        if estimate.upper_bound < 1.0:
            return k, estimates
    return None, estimates


class OffspringEstimator(Estimator):
    """Galton-Watson offspring mean of the killed net, optionally swept over k."""

    def __init__(self):
        super().__init__(self.get_name())

    @classmethod
    def get_name(cls) -> str:
        return "offspring"

    @classmethod
    def get_default_parameters(cls):
        return {
            "t": {
                "type": "float",
                "label": "Generation length (macroscopic time)",
                "min": 0.0,
            },
            "k_grid": {
                "type": "float_list",
                "label": "Sweep kill rates for extinction",
            },
        }

    def run(self, config, runner):
        if not config.k_grid:
            return [
                offspring_mean(
                    config.scaled, config.reps, config.seed, runner, config.t
                )
            ]
        k_star, estimates = extinction_sweep(
            config.scaled, config.k_grid, config.reps, config.seed, runner, config.t
        )
        if k_star is None:
            logger.warning("extinction sweep: no k on the grid certifies extinction")
        else:
            logger.info(
                f"extinction sweep: offspring mean certainly < 1 at k={k_star:g}"
            )
        return estimates
