import logging
from dataclasses import dataclass

import numpy as np

from bck_net.core import ConfigurationError, Estimator, LatticePoint
from bck_net.field import ArrowField, derive_seed
from bck_net.simulation.runner import ReplicateRunner, default_runner
from bck_net.walkers import PointSet, ScaledConfig, step_point_set

from .estimate import Estimate

__all__: list[str] = [
    "DominationReport",
    "min_label_step",
    "domination_check",
    "DominationEstimator",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DominationReport:
    """Outcome of the trace-inclusion check.

    `violation` and `replicate` identify the first joint-net particle found
    outside the union of the independent nets, if any.
    """

    passed: bool
    replicates: int
    steps: int
    violation: LatticePoint | None = None
    replicate: int | None = None

    def to_estimate(self) -> Estimate:
        notes = ""
        if not self.passed:
            notes = f"violation at {self.violation} in replicate {self.replicate}"
        return Estimate(
            "domination_violations",
            0.0 if self.passed else 1.0,
            0.0,
            self.replicates,
            reference=0.0,
            notes=notes,
            extras={"steps": float(self.steps)},
        )


def min_label_step(
    fields: list[ArrowField], nets: list[PointSet], joint: PointSet
) -> tuple[PointSet, np.ndarray]:
    """One step of the joint net under the minimum-label rule.

    A joint particle at x follows the environment of the smallest label i
    whose independent net occupies x.

    Returns:
        (joint net at t + 1, positions of joint particles with no label)
    """
    xs = joint.positions
    labels = np.full(xs.size, -1, dtype=np.int64)
    for i in range(len(nets) - 1, -1, -1):
        labels[np.isin(xs, nets[i].positions)] = i
    orphans = xs[labels < 0]

    targets = []
    for i in np.unique(labels[labels >= 0]):
        group = xs[labels == i]
        left, right = fields[i].offspring(group, joint.time, killing=True)
        targets.append(group[left] - 1)
        targets.append(group[right] + 1)
    positions = np.zeros(0, dtype=np.int64)
    if targets:
        positions = np.unique(np.concatenate(targets))
    return PointSet(joint.time + 1, positions), orphans


def domination_check(
    cfg: ScaledConfig,
    starts: list[LatticePoint],
    horizon: int,
    reps: int,
    seed: int = 0,
    runner: ReplicateRunner | None = None,
) -> DominationReport:
    """Assert that the joint net stays inside the union of independent nets.

    Each start z_i gets its own environment E_i; the independent net i runs in
    E_i from z_i and the joint net runs from all starts under the
    minimum-label rule. Inclusion is checked after every step of every
    replicate; there is no tolerance.
    """
    if not starts:
        raise ConfigurationError("domination_check needs at least one start")
    if len(set(starts)) != len(starts):
        raise ConfigurationError(f"starts must be distinct, got {starts}")
    t0 = starts[0].t
    if any(z.t != t0 for z in starts):
        raise ConfigurationError("all starts must share one time coordinate")
    runner = default_runner(runner)
    logger.info(f"domination: {len(starts)} starts, {horizon} steps, {reps} replicates")

    def replicate(r: int) -> LatticePoint | None:
        base = derive_seed(seed, r)
        fields = [
            ArrowField(cfg.field_params(derive_seed(base, i)))
            for i in range(len(starts))
        ]
        nets = [PointSet.single(z.x, z.t) for z in starts]
        joint = PointSet(t0, sorted(z.x for z in starts))
        for _ in range(horizon):
            joint, orphans = min_label_step(fields, nets, joint)
            if orphans.size:
                return LatticePoint(int(orphans[0]), joint.time - 1)
            nets = [
                step_point_set(f, net, killing=True) for f, net in zip(fields, nets)
            ]
            union = np.unique(np.concatenate([n.positions for n in nets]))
            outside = joint.positions[~np.isin(joint.positions, union)]
            if outside.size:
                return LatticePoint(int(outside[0]), joint.time)
        return None

    results = runner.map(replicate, reps)
    for r, violation in enumerate(results):
        if violation is not None:
            logger.error(f"domination violated at {violation} in replicate {r}")
            return DominationReport(False, reps, horizon, violation, r)
    return DominationReport(True, reps, horizon)


class DominationEstimator(Estimator):
    """Trace inclusion of the minimum-label joint net in independent nets."""

    def __init__(self):
        super().__init__(self.get_name())

    @classmethod
    def get_name(cls) -> str:
        return "domination"

    @classmethod
    def get_default_parameters(cls):
        return {
            "starts": {"type": "int_list", "label": "Even start positions at time 0"},
            "horizon": {"type": "int", "label": "Number of lattice steps", "min": 0},
        }

    def run(self, config, runner):
        xs = config.starts or [0]
        starts = [LatticePoint(int(x), 0) for x in xs]
        report = domination_check(
            config.scaled, starts, config.horizon, config.reps, config.seed, runner
        )
        return [report.to_estimate()]
