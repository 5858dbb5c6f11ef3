import numpy as np
import pytest

from bck_net.analytic import hitting_survival
from bck_net.core import (
    ConfigurationError,
    LatticeBox,
    LatticePoint,
    OutcomeKind,
    ParityError,
    Web,
    Window,
)
from bck_net.dual import (
    Censored,
    age_at,
    aged_kill_points,
    kill_sites,
    membership,
    trace_dual,
    wedge_ages,
    wedge_walk,
)
from bck_net.field import ArrowField
from bck_net.simulation.oracle import check_lattice, stored_lattice
from bck_net.walkers import bc_point_set

from .conftest import frequency_within


def _spaced_sites(n_sites, depth, t):
    spacing = 2 * depth + 4
    return spacing * np.arange(n_sites, dtype=np.int64), t


def test_dual_directions_under_full_branching():
    field = ArrowField.create("layered", 1.0, 0.0, seed=1)
    ys = np.arange(-9, 10, 2)
    assert np.all(field.dual_web_directions(ys, 1, Web.LEFT) == 1)
    assert np.all(field.dual_web_directions(ys, 1, Web.RIGHT) == -1)


def test_dual_directions_follow_rotated_outcomes():
    field = ArrowField.create("layered", 0.0, 0.0, seed=4)
    for y in range(-15, 16, 2):
        kind = field.dual_outcome_at(LatticePoint(y, 1)).kind
        step = int(field.dual_web_directions(y, 1, Web.LEFT)[0])
        assert step == (1 if kind == OutcomeKind.RIGHT_ONLY else -1)


def test_trace_dual_runs_backward():
    field = ArrowField.create("layered", 0.5, 0.0, seed=2)
    trace = trace_dual(field, LatticePoint(1, 10), Web.RIGHT, 6)
    assert trace.times.tolist() == [10, 9, 8, 7, 6, 5, 4]
    with pytest.raises(ParityError):
        trace_dual(field, LatticePoint(0, 10), Web.RIGHT, 6)


def test_full_branching_never_closes_the_wedge():
    field = ArrowField.create("layered", 1.0, 0.0, seed=1)
    assert age_at(field, 0, 20, 10) == Censored(10)
    assert membership(field, 0, 20, 0)
    walk = wedge_walk(field, 0, 20, 5)
    assert walk.meet_depth is None
    assert walk.separation.tolist() == [2, 4, 6, 8, 10, 12]


def test_membership_at_start_time():
    field = ArrowField.create("layered", 0.0, 0.0, seed=1)
    assert membership(field, 4, 6, 6)
    with pytest.raises(ConfigurationError):
        membership(field, 4, 6, 7)


def test_age_zero_probability_without_branching():
    field = ArrowField.create("layered", 0.0, 0.0, seed=6)
    xs, t = _spaced_sites(40_000, 1, 10)
    ages, censored = wedge_ages(field, xs, t, 1)
    assert frequency_within(~censored & (ages == 0), 0.25)


@pytest.mark.parametrize("b_site, n", [(0.3, 5), (0.1, 12)])
def test_age_tail_matches_hitting_survival(b_site, n):
    expected = hitting_survival(b_site, n)
    ok = False
    for seed in (3, 4):
        field = ArrowField.create("layered", b_site, 0.0, seed=seed)
        xs, t = _spaced_sites(30_000, n, 50)
        _, censored = wedge_ages(field, xs, t, n)
        if frequency_within(censored, expected):
            ok = True
            break
    assert ok


def test_separation_steps():
    field = ArrowField.create("layered", 0.4, 0.0, seed=8)
    for x in range(0, 40, 4):
        walk = wedge_walk(field, x, 60, 50)
        sep = walk.separation
        assert sep[0] == 2
        assert set(np.diff(sep).tolist()) <= {-2, 0, 2}
        if walk.meet_depth is not None:
            assert sep[-1] == 0
            assert np.all(sep[:-1] > 0)
        else:
            assert np.all(sep > 0)


@pytest.mark.parametrize("b", [0.0, 0.4])
def test_separation_step_frequencies(b):
    field = ArrowField.create("layered", b, 0.0, seed=12)
    # starts 204 apart keep the walls of different walks on disjoint sites
    walks = [wedge_walk(field, x, 60, 50) for x in range(0, 61200, 204)]
    steps = np.concatenate([np.diff(walk.separation) for walk in walks])
    assert frequency_within(steps == 2, (1 + b) ** 2 / 4, n_se=4.0)
    assert frequency_within(steps == -2, (1 - b) ** 2 / 4, n_se=4.0)
    assert frequency_within(steps == 0, (1 - b**2) / 2, n_se=4.0)


def test_censoring_is_consistent_across_depths():
    field = ArrowField.create("layered", 0.2, 0.0, seed=10)
    xs = np.arange(0, 400, 2)
    short, short_cens = wedge_ages(field, xs, 40, 10)
    long, long_cens = wedge_ages(field, xs, 40, 30)
    assert np.all(short_cens[long_cens])
    resolved = ~short_cens
    assert np.array_equal(short[resolved], long[resolved])
    assert np.all(long[short_cens] >= 10)


@pytest.mark.parametrize("mode, k", [("layered", 0.3), ("joint", 0.1)])
def test_membership_matches_point_set(mode, k):
    field = ArrowField.create(mode, 0.3, k, seed=14, resample_kill_arrows=True)
    window = Window(-12, 12, buffer=15)
    ps = bc_point_set(field, 5, 20, window, killing=False)
    for x in range(-12, 13, 2):
        assert membership(field, x, 20, 5) == (x in ps)


def test_wedge_ages_match_forward_ancestry():
    field = ArrowField.create("layered", 0.3, 0.1, seed=15)
    env = stored_lattice(field, 14, 12)
    assert check_lattice(env, 14, 12) == []


class TestAgedKillPoints:
    box = LatticeBox(0, 19, 10, 19)

    def test_validation(self):
        field = ArrowField.create("layered", 0.3, 0.2, seed=1)
        with pytest.raises(ConfigurationError):
            aged_kill_points(field, self.box, 0, 5)
        with pytest.raises(ConfigurationError):
            aged_kill_points(field, self.box, 5, 4)

    def test_no_killing(self):
        field = ArrowField.create("layered", 0.3, 0.0, seed=1)
        assert aged_kill_points(field, self.box, 2, 10) == []

    def test_full_branching_keeps_every_mark(self):
        field = ArrowField.create("layered", 1.0, 0.5, seed=1)
        points = aged_kill_points(field, self.box, 2, 10)
        assert len(points) == kill_sites(field, self.box)[0].size > 0
        assert all(p.is_censored for p in points)

    def test_ages_respect_threshold(self):
        field = ArrowField.create("layered", 0.2, 1.0, seed=2)
        points = aged_kill_points(field, self.box, 3, 8)
        assert len(points) < self.box.n_even_sites
        for p in points:
            assert p.is_censored or p.age >= 3
            assert age_at(field, p.x, p.t, 8) == p.age
