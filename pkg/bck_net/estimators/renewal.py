import logging
from dataclasses import dataclass

import numpy as np
from scipy.stats import ks_2samp

from bck_net.core import ConfigurationError, Environment, Estimator
from bck_net.simulation.runner import ReplicateRunner, default_runner
from bck_net.walkers import ScaledConfig

from .constants import KS_CRITICAL_5PCT
from .estimate import Estimate
from .killing_times import feasible_config, first_killing_time

__all__: list[str] = [
    "RenewalSequence",
    "renewal_times",
    "estimate_renewal_gaps",
    "gap_law_ks",
    "RenewalEstimator",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RenewalSequence:
    """Renewal times on [-n0, n0]: each restarts the full-line point set at the
    previous renewal and waits for its first killing hit."""

    n0: int
    times: np.ndarray

    @property
    def gaps(self) -> np.ndarray:
        """Complete inter-renewal gaps, the first measured from -n0."""
        return np.diff(np.concatenate(([-self.n0], self.times)))

    @property
    def max_gap(self) -> int:
        """Largest complete gap, or 2 n0 when there is no renewal."""
        gaps = self.gaps
        return int(gaps.max()) if gaps.size else 2 * self.n0


def renewal_times(field: Environment, half_width: int, n0: int) -> RenewalSequence:
    times: list[int] = []
    current = -n0
    while current < n0:
        hit = first_killing_time(field, half_width, current, n0 - current)
        if hit.censored:
            break
        times.append(hit.time)
        current = hit.time
    return RenewalSequence(n0, np.array(times, dtype=np.int64))


def _setup(
    cfg: ScaledConfig, l0_macro: float, t0_macro: float
) -> tuple[ScaledConfig, int, int]:
    if l0_macro <= 0 or t0_macro <= 0:
        raise ConfigurationError(
            f"L0 and T0 must be > 0, got L0={l0_macro}, T0={t0_macro}"
        )
    cfg = feasible_config(cfg.for_reference_net(), l0_macro, 2.0 * t0_macro)
    return cfg, cfg.lattice_length(l0_macro), cfg.lattice_time(t0_macro)


def _gap_ks(
    gaps: list[np.ndarray], indices: tuple[int, int]
) -> tuple[float, float, float, int] | None:
    """KS statistic, p-value, 5% critical value and sample size for the gaps of
    two renewal indices, or None when fewer than two replicates reach both."""
    i, j = indices
    reached = [g for g in gaps if g.size > max(i, j)]
    if len(reached) < 2:
        return None
    first = np.array([g[i] for g in reached], dtype=np.float64)
    second = np.array([g[j] for g in reached], dtype=np.float64)
    result = ks_2samp(first, second)
    n = len(reached)
    critical = KS_CRITICAL_5PCT * np.sqrt(2.0 / n)
    return float(result.statistic), float(result.pvalue), float(critical), n


def estimate_renewal_gaps(
    cfg: ScaledConfig,
    l0_macro: float,
    t0_macro: float,
    reps: int,
    seed: int = 0,
    runner: ReplicateRunner | None = None,
) -> Estimate:
    """Largest gap between successive renewal times on [-T0, T0], macroscopic units.

    Extras carry the median and quartiles of the max gap, the mean number of
    renewals and, when enough replicates renew twice, a Kolmogorov-Smirnov
    comparison of the first two gaps.
    """
    cfg, half, n0 = _setup(cfg, l0_macro, t0_macro)
    runner = default_runner(runner)
    logger.info(
        f"renewal: half-width {half}, n0={n0}, {reps} replicates [{cfg.describe()}]"
    )

    def replicate(r: int) -> RenewalSequence:
        return renewal_times(cfg.field_for(seed, r), half, n0)

    sequences = runner.map(replicate, reps)
    samples = np.array([cfg.macro_time(seq.max_gap) for seq in sequences])
    counts = np.array([seq.times.size for seq in sequences], dtype=np.float64)
    extras = {
        "q25": float(np.quantile(samples, 0.25)),
        "median": float(np.median(samples)),
        "q75": float(np.quantile(samples, 0.75)),
        "mean_renewals": float(counts.mean()),
    }
    ks = _gap_ks([seq.gaps for seq in sequences], (0, 1))
    if ks is not None:
        statistic, p_value, critical, n = ks
        extras.update(
            gap_ks=statistic, gap_ks_p=p_value, gap_ks_critical_5pct=critical
        )
        logger.info(f"renewal gap law: KS={statistic:.4f} over {n} replicates")
    return Estimate.from_samples(
        f"renewal_max_gap[L0={l0_macro:g}]",
        samples,
        notes=f"half_width={half} n0={n0} beta={cfg.beta:g}",
        extras=extras,
    )


def gap_law_ks(
    cfg: ScaledConfig,
    l0_macro: float,
    t0_macro: float,
    reps: int,
    seed: int = 0,
    runner: ReplicateRunner | None = None,
    indices: tuple[int, int] = (0, 1),
) -> Estimate:
    """Two-sample Kolmogorov-Smirnov statistic between renewal gaps of two indices.

    Replicates with fewer renewals than needed are skipped. The mean is the KS
    statistic; extras hold the p-value and the 5% critical value.
    """
    cfg, half, n0 = _setup(cfg, l0_macro, t0_macro)
    runner = default_runner(runner)
    i, j = indices

    def replicate(r: int) -> np.ndarray:
        return renewal_times(cfg.field_for(seed, r), half, n0).gaps

    ks = _gap_ks(runner.map(replicate, reps), indices)
    if ks is None:
        raise ConfigurationError(
            f"fewer than 2 replicates reached renewal {max(i, j) + 1}; "
            "raise k, T0 or reps"
        )
    statistic, p_value, critical, n = ks
    return Estimate(
        f"renewal_gap_ks[{i},{j}]",
        statistic,
        0.0,
        n,
        notes=f"half_width={half} n0={n0}",
        extras={"p_value": p_value, "critical_5pct": critical},
    )


class RenewalEstimator(Estimator):
    """Maximum renewal gap over a grid of window half-widths L0."""

    def __init__(self):
        super().__init__(self.get_name())

    @classmethod
    def get_name(cls) -> str:
        return "renewal"

    @classmethod
    def get_default_parameters(cls):
        return {
            "L": {"type": "float", "label": "Window half-width L0", "min": 0.0},
            "t": {
                "type": "float",
                "label": "Half-length T0 of the time interval",
                "min": 0.0,
            },
            "L_grid": {"type": "float_list", "label": "L0 values (overrides --L)"},
        }

    def run(self, config, runner):
        grid = config.L_grid or [config.L]
        return [
            estimate_renewal_gaps(
                config.scaled, l0, config.t, config.reps, config.seed, runner
            )
            for l0 in grid
        ]
