import logging
from dataclasses import dataclass

import numpy as np

from bck_net.core import ConfigurationError, CouplingViolationError, Estimator
from bck_net.simulation.runner import ReplicateRunner, default_runner
from bck_net.walkers import PointSet, ScaledConfig, evolve

from .estimate import Estimate

__all__: list[str] = [
    "survival_indicators",
    "survival_curve",
    "OverlayPoint",
    "scaling_overlay",
    "SurvivalEstimator",
]

logger = logging.getLogger(__name__)


def _check_grid(k_grid) -> list[float]:
    grid = [float(k) for k in k_grid]
    if not grid:
        raise ConfigurationError("k_grid must not be empty")
    if any(b < a for a, b in zip(grid, grid[1:])):
        raise ConfigurationError(f"k_grid must be sorted ascending, got {grid}")
    return grid


def survival_indicators(
    cfg: ScaledConfig, k_grid, steps: int, seed: int, replicate: int
) -> np.ndarray:
    """Whether the killed point set started from (0, 0) is alive after `steps`,
    for each k, all in one environment.

    Raises:
        CouplingViolationError: survival increases along the k grid
    """
    base = cfg.field_for(seed, replicate)
    alive = np.zeros(len(k_grid), dtype=bool)
    for i, k in enumerate(k_grid):
        field = base.with_k(cfg.with_k(k).k_site)
        final = evolve(field, PointSet.single(0, 0), steps, killing=True)
        alive[i] = not final.is_empty
    if np.any(np.diff(alive.astype(np.int8)) > 0):
        raise CouplingViolationError(
            f"replicate {replicate}: survival not monotone "
            f"along k grid {list(k_grid)}: {alive}"
        )
    return alive


def survival_curve(
    cfg: ScaledConfig,
    k_grid,
    t_macro: float,
    reps: int,
    seed: int = 0,
    runner: ReplicateRunner | None = None,
) -> list[Estimate]:
    """Survival probability up to time T for each k on the grid.

    All k share replicate environments, so each replicate's survival
    indicator is non-increasing along the grid; this is asserted.
    """
    grid = _check_grid(k_grid)
    if t_macro <= 0:
        raise ConfigurationError(f"T must be > 0, got {t_macro}")
    for k in grid:
        cfg.with_k(k)
    runner = default_runner(runner)
    steps = cfg.lattice_time(t_macro)
    logger.info(f"survival: {len(grid)} k values, {steps} steps, {reps} replicates")

    alive = np.array(
        runner.map(lambda r: survival_indicators(cfg, grid, steps, seed, r), reps)
    )
    return [
        Estimate.from_samples(
            f"survival[k={k:g}]",
            alive[:, i].astype(np.float64),
            notes=f"steps={steps} beta={cfg.beta:g}",
            extras={"k": k, "T": cfg.macro_time(steps)},
        )
        for i, k in enumerate(grid)
    ]


@dataclass(frozen=True)
class OverlayPoint:
    k: float
    original: Estimate
    rescaled: Estimate

    @property
    def z_score(self) -> float:
        se = float(np.hypot(self.original.std_error, self.rescaled.std_error))
        diff = self.original.mean - self.rescaled.mean
        if se == 0:
            return 0.0 if diff == 0 else float(np.copysign(np.inf, diff))
        return diff / se


def scaling_overlay(
    cfg: ScaledConfig,
    k_grid,
    t_macro: float,
    reps: int,
    seed: int = 0,
    runner: ReplicateRunner | None = None,
) -> list[OverlayPoint]:
    """Survival at (b, k, T) against survival at (1, k / b^2, b^2 T).

    Diffusive rescaling by ln b maps the net with branching b to the one
    with branching 1, so both curves estimate the same probabilities.
    Independent seeds are used for the two curves.
    """
    if cfg.b <= 0:
        raise ConfigurationError("the scaling relation needs b > 0")
    grid = _check_grid(k_grid)
    b2 = cfg.b**2
    original = survival_curve(cfg, grid, t_macro, reps, seed, runner)
    rescaled = survival_curve(
        cfg.with_b(1.0),
        [k / b2 for k in grid],
        t_macro * b2,
        reps,
        (seed + 1) % 2**64,
        runner,
    )
    return [OverlayPoint(k, a, c) for k, a, c in zip(grid, original, rescaled)]


class SurvivalEstimator(Estimator):
    """Survival probability of the killed net from the origin along a k grid."""

    def __init__(self):
        super().__init__(self.get_name())

    @classmethod
    def get_name(cls) -> str:
        return "survival"

    @classmethod
    def get_default_parameters(cls):
        return {
            "t": {"type": "float", "label": "Macroscopic time horizon", "min": 0.0},
            "k_grid": {"type": "float_list", "label": "Kill rates (ascending)"},
        }

    def run(self, config, runner):
        grid = config.k_grid or [config.k]
        return survival_curve(
            config.scaled, grid, config.t, config.reps, config.seed, runner
        )
