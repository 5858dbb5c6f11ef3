import logging
import math

import numpy as np
import pytest

from bck_net.core import (
    ConfigurationError,
    FieldMode,
    InexactBoundaryError,
    LatticePoint,
    OutcomeKind,
    ParityError,
    PathRule,
    TerminationKind,
    UndefinedArrowError,
    Window,
)
from bck_net.field import ArrowField
from bck_net.walkers import (
    PointSet,
    ScaledConfig,
    bc_point_set,
    evolve,
    evolve_in_cone,
    rescale,
    step_point_set,
    trace_path,
    web_paths,
)

from .conftest import TableEnvironment


def _positions(ps):
    return ps.positions.tolist()


class TestPointSet:
    def test_rejects_wrong_parity(self):
        with pytest.raises(ParityError):
            PointSet(0, [1, 3])

    def test_rejects_unsorted(self):
        with pytest.raises(ConfigurationError):
            PointSet(0, [2, 0])

    def test_membership_and_union(self):
        a = PointSet(1, [-1, 3])
        b = PointSet(1, [1, 3])
        assert 3 in a and 1 not in a
        assert _positions(a.union(b)) == [-1, 1, 3]
        with pytest.raises(ConfigurationError):
            a.union(PointSet(0, [0]))

    def test_full_respects_parity(self):
        assert _positions(PointSet.full(-3, 3, 1)) == [-3, -1, 1, 3]
        assert _positions(PointSet.full(-3, 3, 0)) == [-2, 0, 2]


class TestStep:
    def test_coalescing_pair(self):
        env = TableEnvironment({(2, 0): OutcomeKind.LEFT_ONLY})
        ps = step_point_set(env, PointSet(0, [0, 2]))
        assert ps.time == 1
        assert _positions(ps) == [1]

    def test_branching(self):
        env = TableEnvironment({(0, 0): OutcomeKind.BOTH})
        assert _positions(step_point_set(env, PointSet.single(0, 0))) == [-1, 1]

    def test_joint_kill_site_is_a_sink(self):
        env = TableEnvironment({(0, 0): OutcomeKind.KILL}, mode=FieldMode.JOINT)
        assert step_point_set(env, PointSet.single(0, 0)).is_empty
        assert step_point_set(env, PointSet.single(0, 0), killing=False).is_empty

    def test_kill_mark_only_applies_with_killing(self):
        env = TableEnvironment(marks=[(0, 0)])
        assert step_point_set(env, PointSet.single(0, 0)).is_empty
        stepped = step_point_set(env, PointSet.single(0, 0), killing=False)
        assert _positions(stepped) == [1]

    def test_latent_arrow_used_without_killing(self):
        env = TableEnvironment(
            {(0, 0): OutcomeKind.KILL}, latent={(0, 0): -1}, mode=FieldMode.JOINT
        )
        stepped = step_point_set(env, PointSet.single(0, 0), killing=False)
        assert _positions(stepped) == [-1]

    def test_empty_stays_empty(self):
        env = TableEnvironment()
        ps = evolve(env, PointSet(0, []), 5)
        assert ps.is_empty and ps.time == 5

    def test_reflection_marks_inexact(self):
        env = TableEnvironment()
        ps = step_point_set(env, PointSet(0, [2]), bounds=(-3, 2), reflect=True)
        assert _positions(ps) == [1]
        assert not ps.exact


class TestBcPointSet:
    def test_same_time_is_full_core(self):
        field = ArrowField.create("layered", 0.3, 0.1, seed=1)
        ps = bc_point_set(field, 0, 0, Window(-4, 4))
        assert _positions(ps) == [-4, -2, 0, 2, 4]

    def test_all_branching_fills_the_core(self):
        field = ArrowField.create("layered", 1.0, 0.0, seed=1)
        ps = bc_point_set(field, 0, 3, Window(-5, 5, buffer=3))
        assert _positions(ps) == [-5, -3, -1, 1, 3, 5]
        assert ps.exact

    def test_requires_buffer(self):
        field = ArrowField.create("layered", 0.3, 0.0, seed=1)
        with pytest.raises(InexactBoundaryError):
            bc_point_set(field, 0, 3, Window(-5, 5, buffer=1))

    def test_approximate_mode_warns(self, caplog):
        field = ArrowField.create("layered", 0.3, 0.0, seed=1)
        with caplog.at_level(logging.WARNING):
            ps = bc_point_set(field, 0, 6, Window(-5, 5, buffer=1), approximate=True)
        assert not ps.exact
        assert np.all((ps.positions >= -5) & (ps.positions <= 5))
        assert "Approximate" in caplog.text

    def test_rejects_reversed_times(self):
        field = ArrowField.create("layered", 0.3, 0.0, seed=1)
        with pytest.raises(ConfigurationError):
            bc_point_set(field, 3, 1, Window(-5, 5, buffer=5))

    @pytest.mark.parametrize("mode", ["layered", "joint"])
    def test_light_cone_matches_unbounded_run(self, mode):
        field = ArrowField.create(mode, 0.3, 0.05, seed=12)
        window = Window(-10, 10, buffer=20)
        ps = bc_point_set(field, 0, 20, window)
        brute = evolve(field, PointSet.full(-60, 60, 0), 20).restrict(-10, 10)
        assert ps == brute

    def test_cone_yields_every_step(self):
        field = ArrowField.create("layered", 0.3, 0.0, seed=2)
        sets = list(evolve_in_cone(field, PointSet.full(-20, 20, 0), -4, 4, 6))
        assert [ps.time for ps in sets] == [1, 2, 3, 4, 5, 6]

    def test_step_commutes_with_union(self):
        field = ArrowField.create("layered", 0.2, 0.1, seed=5)
        a = PointSet(4, [-6, 0, 8])
        b = PointSet(4, [-2, 0, 12])
        assert step_point_set(field, a.union(b)) == step_point_set(field, a).union(
            step_point_set(field, b)
        )

    @pytest.mark.parametrize("mode", ["layered", "joint"])
    def test_more_killing_gives_a_subset(self, mode):
        low = ArrowField.create(mode, 0.3, 0.05, seed=9)
        high = low.with_k(0.2)
        window = Window(-30, 30, buffer=25)
        weak = set(bc_point_set(low, 0, 25, window).positions.tolist())
        strong = set(bc_point_set(high, 0, 25, window).positions.tolist())
        assert strong <= weak


class TestPaths:
    def test_straight_path(self):
        trace = trace_path(TableEnvironment(), LatticePoint(0, 0), PathRule.LEFTMOST, 4)
        assert trace.termination.kind == TerminationKind.HORIZON
        assert trace.end == LatticePoint(4, 4)
        assert trace.position_at(2) == 2

    def test_killed_before_moving(self):
        env = TableEnvironment(marks=[(2, 2)])
        trace = trace_path(env, LatticePoint(0, 0), PathRule.RIGHTMOST, 10)
        assert trace.termination.kind == TerminationKind.KILLED
        assert trace.termination.at == LatticePoint(2, 2)
        assert len(trace) == 2

    def test_exits_window(self):
        trace = trace_path(
            TableEnvironment(),
            LatticePoint(0, 0),
            PathRule.UNIFORM_HOP,
            10,
            window=Window(-1, 1),
        )
        assert trace.termination.kind == TerminationKind.EXITED_WINDOW
        assert trace.end == LatticePoint(2, 2)

    def test_branch_rules(self):
        env = TableEnvironment({(0, 0): OutcomeKind.BOTH})
        assert trace_path(env, LatticePoint(0, 0), PathRule.LEFTMOST, 1).end.x == -1
        assert trace_path(env, LatticePoint(0, 0), PathRule.RIGHTMOST, 1).end.x == 1
        # hop uniform 0.25 < 0.5 picks the left arrow
        assert trace_path(env, LatticePoint(0, 0), PathRule.UNIFORM_HOP, 1).end.x == -1

    def test_undefined_arrow_without_killing(self):
        field = ArrowField.create("joint", 0.0, 1.0, seed=0)
        with pytest.raises(UndefinedArrowError):
            trace_path(field, LatticePoint(0, 0), PathRule.LEFTMOST, 3, killing=False)

    def test_parity(self):
        with pytest.raises(ParityError):
            trace_path(TableEnvironment(), LatticePoint(1, 0), PathRule.LEFTMOST, 3)

    def test_extremal_paths_bound_the_point_set(self):
        field = ArrowField.create("layered", 0.4, 0.0, seed=31)
        start = LatticePoint(0, 0)
        lo = trace_path(field, start, PathRule.LEFTMOST, 30).end.x
        hi = trace_path(field, start, PathRule.RIGHTMOST, 30).end.x
        ps = evolve(field, PointSet.single(0, 0), 30)
        assert ps.positions[0] == lo
        assert ps.positions[-1] == hi

    @pytest.mark.parametrize("seed", range(10))
    def test_uniform_hop_lies_between_extremal_paths(self, seed):
        field = ArrowField.create("layered", 0.4, 0.0, seed=seed)
        start = LatticePoint(2 * seed, 0)
        left, hop, right = (
            trace_path(field, start, rule, 60).positions
            for rule in (PathRule.LEFTMOST, PathRule.UNIFORM_HOP, PathRule.RIGHTMOST)
        )
        assert left.size == hop.size == right.size == 61
        assert np.all(left <= hop)
        assert np.all(hop <= right)

    def test_web_paths_agree_with_trace(self):
        field = ArrowField.create("layered", 0.4, 0.0, seed=3)
        paths = web_paths(field, [-4, 0, 6], 0, 12, "left")
        for j, x in enumerate([-4, 0, 6]):
            trace = trace_path(field, LatticePoint(x, 0), PathRule.LEFTMOST, 12)
            assert paths[:, j].tolist() == trace.positions.tolist()

    def test_web_paths_never_cross(self):
        field = ArrowField.create("layered", 0.4, 0.0, seed=3)
        paths = web_paths(field, np.arange(-20, 21, 2), 0, 40, "right")
        assert np.all(np.diff(paths, axis=1) >= 0)


class TestScaling:
    def test_rescale(self):
        x, t = rescale(LatticePoint(4, 16), math.log(2.0))
        assert x == pytest.approx(2.0)
        assert t == pytest.approx(4.0)

    def test_rounding(self):
        cfg = ScaledConfig(beta=0.0)
        assert cfg.lattice_length(3.0) == 4
        assert cfg.lattice_length(1.0) == 2
        assert cfg.lattice_time(0.0) == 0
        assert cfg.lattice_time(0.1) == 1
        assert ScaledConfig(beta=1.0).lattice_time(1.0) == 7

    def test_site_probabilities(self):
        cfg = ScaledConfig(b=2.0, k=3.0, beta=2.0)
        assert cfg.b_site == pytest.approx(2.0 * math.exp(-2.0))
        assert cfg.k_site == pytest.approx(3.0 * math.exp(-4.0))

    def test_site_probability_limits(self):
        with pytest.raises(ConfigurationError):
            ScaledConfig(b=3.0, beta=0.0)
        with pytest.raises(ConfigurationError):
            ScaledConfig(mode="joint", b=1.0, k=0.5, beta=0.0)
        with pytest.raises(ConfigurationError):
            ScaledConfig(beta=-1.0)

    def test_reference_net_resamples_in_joint_mode(self):
        cfg = ScaledConfig(mode="joint", b=0.5, k=0.2)
        assert cfg.for_reference_net().resample
        assert not ScaledConfig().for_reference_net().resample

    def test_replicate_fields_share_arrows_across_k(self):
        cfg = ScaledConfig(b=1.0, k=1.0, beta=1.0)
        a = cfg.field_for(7, 3)
        b = cfg.with_k(4.0).field_for(7, 3)
        xs = np.arange(0, 200, 2)
        assert np.array_equal(a.kinds(xs, 0), b.kinds(xs, 0))
