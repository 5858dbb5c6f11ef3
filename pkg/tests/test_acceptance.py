"""Statistical end-to-end checks at beta = 4. Run with `pytest -m slow`."""

import pytest

from bck_net.core import LatticePoint, Window
from bck_net.estimators import (
    bernoulli_stationarity,
    domination_check,
    estimate_density,
    estimate_kill_intensity,
    estimate_renewal_gaps,
    estimate_sparseness,
    estimate_theta,
    extinction_sweep,
    scaling_overlay,
    stationary_intensity,
    survival_curve,
)
from bck_net.simulation import ReplicateRunner, oracle_check
from bck_net.walkers import ScaledConfig

from .conftest import within_or_retry

pytestmark = pytest.mark.slow

RUNNER = ReplicateRunner(4)


@pytest.mark.parametrize("b, density", [(0.0, 0.564190), (1.0, 2.050254)])
def test_density_formula(b, density):
    cfg = ScaledConfig(b=b, k=0.0, beta=4.0)
    estimate = within_or_retry(
        lambda reps: estimate_density(cfg, 1.0, 1.0, reps, seed=reps, runner=RUNNER),
        400,
        target=2.0 * density,
    )
    assert estimate.reference == pytest.approx(2.0 * density, rel=1e-3)
    assert estimate.within(3.0, estimate.lattice_reference)


def test_duality_oracle_on_large_lattices():
    report = oracle_check(40, 40, reps=34, b_grid=[0.0, 0.3, 1.0], k_grid=[0.0, 0.2])
    assert report.lattices >= 200
    assert report.passed, [str(d) for d in report.discrepancies]


def test_aged_kill_intensity():
    cfg = ScaledConfig(b=1.0, k=1.0, beta=4.0)
    estimate = within_or_retry(
        lambda reps: estimate_kill_intensity(cfg, reps=reps, seed=reps, runner=RUNNER),
        400,
        target=2.050254,
    )
    assert estimate.within(3.0, estimate.lattice_reference)


def test_bernoulli_stationarity():
    a = stationary_intensity(0.1)
    assert a == pytest.approx(0.330579, abs=1e-6)
    window = Window(-300, 300, buffer=200)

    def report(reps):
        return bernoulli_stationarity(0.1, 200, window, reps, seed=reps, runner=RUNNER)

    within_or_retry(lambda reps: report(reps).drift, 40, target=0.0)
    within_or_retry(lambda reps: report(reps).pair_correlation, 40, target=a * a)
    assert report(40).gap_fit.extras["p_value"] > 0.01


def test_exact_couplings():
    cfg = ScaledConfig(b=1.0, k=1.0, beta=2.0)
    starts = [LatticePoint(x, 0) for x in (-20, -6, 0, 4, 30)]
    report = domination_check(cfg, starts, 200, reps=100, runner=RUNNER)
    assert report.passed

    # raises CouplingViolationError on any non-monotone replicate
    estimates = survival_curve(cfg, [0.0, 1.0, 2.0, 4.0, 8.0], 1.0, 100, runner=RUNNER)
    means = [e.mean for e in estimates]
    assert means == sorted(means, reverse=True)


def test_scaling_relation():
    cfg = ScaledConfig(b=2.0, k=0.0, beta=4.0)
    for reps in (150, 300):
        overlay = scaling_overlay(
            cfg, [2.0, 8.0], 0.25, reps, seed=reps, runner=RUNNER
        )
        if all(abs(point.z_score) <= 3.0 for point in overlay):
            break
    assert all(abs(point.z_score) <= 3.0 for point in overlay)


def test_extinction_certificate(regression_value):
    cfg = ScaledConfig(b=1.0, beta=4.0)
    k_star, estimates = extinction_sweep(
        cfg, [5.0, 10.0, 20.0, 40.0, 60.0, 80.0, 100.0], 200, runner=RUNNER
    )
    assert k_star is not None and k_star <= 100.0
    means = [e.mean for e in estimates]
    assert means == sorted(means, reverse=True)
    regression_value("extinction_k_star", k_star)


def test_renewal_gaps_shrink_with_the_window():
    cfg = ScaledConfig(b=1.0, k=1.0, beta=4.0)
    estimates = [
        estimate_renewal_gaps(cfg, l0, 1.0, 60, runner=RUNNER) for l0 in (1.0, 2.0, 4.0)
    ]
    medians = [e.extras["median"] for e in estimates]
    assert medians[0] > medians[1] > medians[2]
    assert estimates[2].extras["q75"] < estimates[0].extras["q25"]


def test_theta_scaled_mean_stays_positive(regression_value):
    cfg = ScaledConfig(b=1.0, k=1.0, beta=4.0)
    estimates = [
        estimate_theta(cfg, l0, 1.0, 100, seed=5, runner=RUNNER)
        for l0 in (1.0, 2.0, 4.0, 8.0)
    ]
    scaled = [e.extras["scaled_mean"] for e in estimates]
    assert min(scaled) > 0.1
    assert scaled[-1] >= scaled[0]
    regression_value("theta_scaled_mean_min", min(scaled))


def test_theta_hits_become_unique_as_beta_grows():
    fractions = []
    for beta in (1.0, 2.5, 4.0):
        cfg = ScaledConfig(b=1.0, k=1.0, beta=beta)
        estimate = estimate_theta(cfg, 1.0, 1.0, 200, seed=6, runner=RUNNER)
        fractions.append(estimate.extras["uniqueness_fraction"])
    assert fractions[-1] >= 0.95
    assert fractions[-1] > fractions[0]


def test_sparseness_at_the_first_killing_time(regression_value):
    cfg = ScaledConfig(b=1.0, k=1.0, beta=4.0)
    estimates = estimate_sparseness(
        cfg, 1.0, 200, [0.01, 0.05, 0.1, 0.2], 1.0, seed=7, runner=RUNNER
    )
    means = [e.mean for e in estimates]
    assert means == sorted(means)
    # two distinct even sites are at least 2 e^-4 > 0.01 apart
    assert means[0] == 0.0
    regression_value("sparseness_beta4", means)
