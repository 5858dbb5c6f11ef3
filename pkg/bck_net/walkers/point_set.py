import logging
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from bck_net.core import (
    ConfigurationError,
    Environment,
    InexactBoundaryError,
    ParityError,
    Window,
    parity_sites,
)

__all__: list[str] = [
    "PointSet",
    "step_point_set",
    "evolve_in_cone",
    "evolve",
    "bc_point_set",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PointSet:
    """Occupied positions of a branching-coalescing point set at one time.

    Positions are strictly increasing and share the parity of `time`.
    `exact` is False when the set was produced under reflecting truncation.
    """

    time: int
    positions: np.ndarray
    exact: bool = True

    def __post_init__(self):
        positions = np.asarray(self.positions, dtype=np.int64).reshape(-1)
        object.__setattr__(self, "positions", positions)
        if positions.size:
            if np.any((positions + self.time) % 2 != 0):
                raise ParityError(
                    f"point set at t={self.time} holds sites of odd parity"
                )
            if np.any(np.diff(positions) <= 0):
                raise ConfigurationError(
                    "point set positions must be strictly increasing"
                )

    @classmethod
    def full(cls, lo: int, hi: int, time: int) -> "PointSet":
        """Every parity-correct site of [lo, hi] at `time`."""
        return cls(time, parity_sites(lo, hi, time))

    @classmethod
    def single(cls, x: int, time: int) -> "PointSet":
        return cls(time, np.array([x], dtype=np.int64))

    def __len__(self) -> int:
        return int(self.positions.size)

    def __contains__(self, x: int) -> bool:
        i = np.searchsorted(self.positions, x)
        return bool(i < self.positions.size and self.positions[i] == x)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.time == other.time and np.array_equal(
            self.positions, other.positions
        )

    def __repr__(self) -> str:
        return f"PointSet(time={self.time}, n={len(self)}, exact={self.exact})"

    @property
    def is_empty(self) -> bool:
        return self.positions.size == 0

    def restrict(self, lo: int, hi: int) -> "PointSet":
        keep = (self.positions >= lo) & (self.positions <= hi)
        return PointSet(self.time, self.positions[keep], self.exact)

    def union(self, other: "PointSet") -> "PointSet":
        if other.time != self.time:
            raise ConfigurationError(
                f"cannot merge point sets at times {self.time} and {other.time}"
            )
        return PointSet(
            self.time,
            np.union1d(self.positions, other.positions),
            self.exact and other.exact,
        )


def step_point_set(
    field: Environment,
    ps: PointSet,
    killing: bool = True,
    bounds: tuple[int, int] | None = None,
    reflect: bool = False,
) -> PointSet:
    """Advance a point set by one time step.

    Every occupied site sends a particle along each of its arrows; the
    result is the union of the targets. Kill sites (and kill marks when
    `killing` is on) send nothing.

    Args:
        field: Environment supplying the local outcomes
        ps: Point set at time t
        killing: Apply kill sites and kill marks
        bounds: Optional inclusive range the result is clipped to
        reflect: Reflect particles leaving `bounds` back inside instead of
            dropping them (approximate truncation)

    Returns:
        Point set at time t + 1
    """
    xs = ps.positions
    if xs.size == 0:
        return PointSet(ps.time + 1, xs, ps.exact)

    left, right = field.offspring(xs, ps.time, killing)
    targets = np.union1d(xs[left] - 1, xs[right] + 1)

    exact = ps.exact
    if bounds is not None:
        lo, hi = bounds
        if reflect:
            outside = (targets < lo) | (targets > hi)
            if outside.any():
                targets = np.where(targets < lo, targets + 2, targets)
                targets = np.where(targets > hi, targets - 2, targets)
                targets = np.unique(targets)
                exact = False
        else:
            targets = targets[(targets >= lo) & (targets <= hi)]
    return PointSet(ps.time + 1, targets, exact)


def evolve_in_cone(
    field: Environment,
    initial: PointSet,
    core_lo: int,
    core_hi: int,
    steps: int,
    killing: bool = True,
) -> Iterator[PointSet]:
    """Evolve `initial` for `steps` steps inside the backward light cone.

    At step u only [core_lo - (steps - u), core_hi + (steps - u)] is kept:
    particles outside cannot reach the core by the final time, so every
    yielded set is exact on the part of the cone it covers and the last one
    is exact on the core.

    Yields:
        The point set after each step (steps sets in total)
    """
    ps = initial.restrict(core_lo - steps, core_hi + steps)
    for u in range(1, steps + 1):
        margin = steps - u
        bounds = (core_lo - margin, core_hi + margin)
        ps = step_point_set(field, ps, killing, bounds=bounds)
        yield ps


def evolve(
    field: Environment,
    initial: PointSet,
    steps: int,
    killing: bool = True,
    stop_when_empty: bool = True,
) -> PointSet:
    """Evolve without spatial truncation; the set grows at most one site per step."""
    ps = initial
    for _ in range(steps):
        if stop_when_empty and ps.is_empty:
            return PointSet(initial.time + steps, ps.positions, ps.exact)
        ps = step_point_set(field, ps, killing)
    return ps


def bc_point_set(
    field: Environment,
    s: int,
    t: int,
    window: Window,
    killing: bool = True,
    approximate: bool = False,
) -> PointSet:
    """Branching-coalescing point set started from the full line at time s.

    Returns the positions at time t reached by some path started at time s,
    restricted to the window core.

    Raises:
        ConfigurationError: s > t
        InexactBoundaryError: window.buffer < t - s and approximate is False
    """
    if s > t:
        raise ConfigurationError(f"bc_point_set requires s <= t, got s={s}, t={t}")
    steps = t - s

    if window.buffer >= steps:
        initial = PointSet.full(window.x_lo - steps, window.x_hi + steps, s)
        ps = initial
        cone = evolve_in_cone(field, initial, window.x_lo, window.x_hi, steps, killing)
        for ps in cone:
            pass
        return ps.restrict(window.x_lo, window.x_hi)

    if not approximate:
        raise InexactBoundaryError(
            f"buffer {window.buffer} is smaller than the light cone t - s = {steps}; "
            "enlarge the buffer or opt into approximate mode"
        )

    logger.warning(
        "Approximate point set: reflecting truncation at "
        f"[{window.sim_lo}, {window.sim_hi}] "
        f"with buffer {window.buffer} < {steps}"
    )
    ps = PointSet(s, parity_sites(window.sim_lo, window.sim_hi, s), exact=False)
    for _ in range(steps):
        ps = step_point_set(
            field, ps, killing, bounds=(window.sim_lo, window.sim_hi), reflect=True
        )
    core = ps.restrict(window.x_lo, window.x_hi)
    return PointSet(ps.time, core.positions, exact=False)
