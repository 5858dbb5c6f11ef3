import logging
from dataclasses import dataclass

import numpy as np
from scipy.stats import chisquare

from bck_net.core import ConfigurationError, Estimator, FieldMode, Window
from bck_net.field import ArrowField, FieldParams, derive_seed
from bck_net.field.constants import INITIAL_STREAM
from bck_net.simulation.runner import ReplicateRunner, default_runner
from bck_net.walkers import PointSet, evolve_in_cone

from .estimate import Estimate

__all__: list[str] = [
    "stationary_intensity",
    "StationarityReport",
    "bernoulli_stationarity",
    "StationarityEstimator",
]

logger = logging.getLogger(__name__)

MAX_GAP_BIN: int = 12


def stationary_intensity(b_site: float) -> float:
    """Occupation probability a = 4b / (1 + b)^2 of the invariant Bernoulli field."""
    return 4.0 * b_site / (1.0 + b_site) ** 2


@dataclass(frozen=True)
class StationarityReport:
    a: float
    drift: Estimate
    pair_correlation: Estimate
    gap_fit: Estimate

    def estimates(self) -> list[Estimate]:
        return [self.drift, self.pair_correlation, self.gap_fit]


def _capped_half_gaps(occupied_sites: np.ndarray, hi: int, n_bins: int) -> np.ndarray:
    """Half-gaps after each occupied site, capped at n_bins.

    Only sites at least 2 n_bins left of `hi` contribute, so the window edge
    never truncates a gap below the cap.
    """
    nxt = np.append(occupied_sites[1:], np.iinfo(np.int64).max // 4)
    usable = occupied_sites <= hi - 2 * n_bins
    return np.minimum((nxt[usable] - occupied_sites[usable]) // 2, n_bins)


def _gap_histogram(half_gaps: np.ndarray, n_bins: int) -> np.ndarray:
    """Counts of half-gaps 1..n_bins-1 plus a tail bin for >= n_bins."""
    counts = np.bincount(half_gaps, minlength=n_bins + 1)
    return counts[1:]


def bernoulli_stationarity(
    b_site: float,
    steps: int,
    window: Window,
    reps: int,
    seed: int = 0,
    runner: ReplicateRunner | None = None,
) -> StationarityReport:
    """Check that Bernoulli(a) occupation of even sites is invariant for the
    killing-free net with site branch probability b_site.

    Starting from independent Bernoulli(a) sites, the net is run for `steps`
    steps and the core window is compared with a fresh Bernoulli(a) field:
    intensity drift (reference 0), occupation of pairs at distance 2
    (reference a^2) and a chi-square test of the gap law (geometric with
    parameter a, in units of 2).

    Raises:
        ConfigurationError: window.buffer < steps
    """
    if window.buffer < steps:
        raise ConfigurationError(
            f"window buffer {window.buffer} must be >= steps {steps} for an exact core"
        )
    if steps < 0:
        raise ConfigurationError(f"steps must be >= 0, got {steps}")
    if steps % 2:
        logger.warning(
            f"odd step count {steps}: the core is read on the odd sublattice"
        )
    runner = default_runner(runner)
    a = stationary_intensity(b_site)
    lo, hi = window.x_lo, window.x_hi

    def replicate(r: int) -> tuple[float, float, np.ndarray]:
        params = FieldParams(FieldMode.LAYERED, b_site, 0.0, derive_seed(seed, r))
        field = ArrowField(params)
        sites = PointSet.full(lo - steps, hi + steps, 0).positions
        initial = PointSet(0, sites[field.uniforms(sites, 0, INITIAL_STREAM) < a])
        final = initial
        for final in evolve_in_cone(field, initial, lo, hi, steps, killing=False):
            pass
        core_sites = window.core_sites(final.time)
        occupied = np.isin(core_sites, final.positions)
        intensity = float(occupied.mean())
        pairs = 0.0
        if occupied.size > 1:
            pairs = float(np.mean(occupied[:-1] & occupied[1:]))
        gaps = _capped_half_gaps(core_sites[occupied], hi, MAX_GAP_BIN)
        return intensity, pairs, gaps

    results = runner.map(replicate, reps)
    intensity = np.array([r[0] for r in results])
    pairs = np.array([r[1] for r in results])
    gaps = np.zeros(0, dtype=np.int64)
    if results:
        gaps = np.concatenate([r[2] for r in results])

    drift = Estimate.from_samples(
        "intensity_drift", intensity - a, 0.0, 0.0, notes=f"a={a:.6f} steps={steps}"
    )
    pair = Estimate.from_samples(
        "pair_correlation_2", pairs, a * a, a * a, extras={"a": a}
    )

    observed = _gap_histogram(gaps.astype(np.int64), MAX_GAP_BIN)
    j = np.arange(1, MAX_GAP_BIN)
    probs = np.append(a * (1.0 - a) ** (j - 1), (1.0 - a) ** (MAX_GAP_BIN - 1))
    total = observed.sum()
    if total == 0 or a >= 1.0:
        fit_stat, p_value = 0.0, 1.0
    else:
        keep = probs * total >= 5.0
        obs = np.append(observed[keep], observed[~keep].sum())
        exp = np.append(probs[keep], probs[~keep].sum()) * total
        if exp[-1] == 0:
            obs, exp = obs[:-1], exp[:-1]
        exp *= obs.sum() / exp.sum()
        result = chisquare(obs, exp)
        fit_stat, p_value = float(result.statistic), float(result.pvalue)
    fit = Estimate(
        "gap_chisquare",
        fit_stat,
        0.0,
        max(1, int(total)),
        notes="geometric gap law of an independent Bernoulli field",
        extras={"p_value": p_value},
    )
    logger.info(f"stationarity: a={a:.6f}, {drift}, {pair}, chi2 p={p_value:.3g}")
    return StationarityReport(a, drift, pair, fit)


class StationarityEstimator(Estimator):
    """Invariance of the Bernoulli field 4b/(1+b)^2 under the killing-free net."""

    def __init__(self):
        super().__init__(self.get_name())

    @classmethod
    def get_name(cls) -> str:
        return "stationarity"

    @classmethod
    def get_default_parameters(cls):
        return {
            "b_site": {"type": "float", "label": "Site branch probability", "min": 0.0},
            "steps": {"type": "int", "label": "Number of lattice steps", "min": 0},
            "width": {"type": "int", "label": "Core window width", "min": 2},
        }

    def run(self, config, runner):
        half = config.width // 2
        window = Window(-half, half, buffer=config.steps)
        report = bernoulli_stationarity(
            config.b_site, config.steps, window, config.reps, config.seed, runner
        )
        return report.estimates()
