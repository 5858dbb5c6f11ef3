import logging

import numpy as np

from bck_net.core import ConfigurationError, Estimator
from bck_net.simulation.runner import ReplicateRunner, default_runner
from bck_net.walkers import ScaledConfig

from .constants import DEFAULT_QUANTILES
from .estimate import Estimate
from .killing_times import feasible_config, first_killing_time

__all__: list[str] = ["estimate_theta", "ThetaEstimator"]

logger = logging.getLogger(__name__)


def estimate_theta(
    cfg: ScaledConfig,
    l_macro: float,
    t_cap_macro: float,
    reps: int,
    seed: int = 0,
    runner: ReplicateRunner | None = None,
) -> Estimate:
    """Distribution of the first time the full-line point set meets a killing
    site inside [-L, L].

    Samples are in macroscopic time and censored at T_cap. Besides the mean,
    the estimate carries quantiles, the fraction of replicates whose hit was a
    single site, the censored fraction, the second and third moments and
    E(theta) L^2.
    """
    if l_macro <= 0 or t_cap_macro <= 0:
        raise ConfigurationError(
            f"L and T_cap must be > 0, got L={l_macro}, T_cap={t_cap_macro}"
        )
    cfg = feasible_config(cfg.for_reference_net(), l_macro, t_cap_macro)
    runner = default_runner(runner)

    half = cfg.lattice_length(l_macro)
    horizon = cfg.lattice_time(t_cap_macro)
    logger.info(
        f"theta: half-width {half}, horizon {horizon} steps, "
        f"{reps} replicates [{cfg.describe()}]"
    )

    def replicate(r: int) -> tuple[float, bool, bool]:
        hit = first_killing_time(cfg.field_for(seed, r), half, 0, horizon)
        if hit.censored:
            return t_cap_macro, False, True
        return cfg.macro_time(hit.time), hit.unique, False

    results = runner.map(replicate, reps)
    samples = np.array([r[0] for r in results])
    unique = np.array([r[1] for r in results], dtype=np.float64)
    censored = np.array([r[2] for r in results], dtype=np.float64)

    resolved = censored == 0
    extras = {
        f"q{int(round(100 * q))}": float(np.quantile(samples, q))
        for q in DEFAULT_QUANTILES
    }
    extras["uniqueness_fraction"] = (
        float(unique[resolved].mean()) if resolved.any() else float("nan")
    )
    extras["censored_fraction"] = float(censored.mean())
    extras["moment_2"] = float(np.mean(samples**2))
    extras["moment_3"] = float(np.mean(samples**3))
    extras["scaled_mean"] = float(samples.mean() * l_macro**2)
    return Estimate.from_samples(
        "theta",
        samples,
        notes=f"half_width={half} horizon={horizon} beta={cfg.beta:g}",
        extras=extras,
    )


class ThetaEstimator(Estimator):
    """First killing time of the full-line point set inside a window."""

    def __init__(self):
        super().__init__(self.get_name())

    @classmethod
    def get_name(cls) -> str:
        return "theta"

    @classmethod
    def get_default_parameters(cls):
        return {
            "L": {"type": "float", "label": "Half-width of the window", "min": 0.0},
            "t": {"type": "float", "label": "Censoring time T_cap", "min": 0.0},
        }

    def run(self, config, runner):
        return [
            estimate_theta(
                config.scaled, config.L, config.t, config.reps, config.seed, runner
            )
        ]
