import logging
from dataclasses import dataclass

import numpy as np

from bck_net.core import (
    ConfigurationError,
    Environment,
    LatticePoint,
    TerminationKind,
    Web,
    check_parity,
)
from bck_net.walkers import PathTrace, Termination

__all__: list[str] = [
    "Censored",
    "WedgeWalk",
    "trace_dual",
    "dual_web_paths",
    "wedge_meet_depths",
    "wedge_ages",
    "wedge_walk",
    "age_at",
    "membership",
]

logger = logging.getLogger(__name__)

NO_MEETING: int = -1


@dataclass(frozen=True, order=True)
class Censored:
    """Age not resolved within the traced depth: the true age is >= max_depth."""

    max_depth: int

    def __str__(self) -> str:
        return f">={self.max_depth}"


@dataclass(frozen=True)
class WedgeWalk:
    """The two dual walls bounding the wedge below an even site (x, t).

    l_hat is the dual left-web path from (x + 1, t), r_hat the dual right-web
    path from (x - 1, t). Both are traced backward until they meet
    (meeting is absorbing) or the depth runs out.
    """

    l_hat: PathTrace
    r_hat: PathTrace
    meet_depth: int | None

    @property
    def separation(self) -> np.ndarray:
        """l_hat - r_hat at backward depths 0, 1, ..."""
        return self.l_hat.positions - self.r_hat.positions


def trace_dual(
    field: Environment, start: LatticePoint, web: Web, depth: int
) -> PathTrace:
    """Backward path of the dual left or right web from an odd site.

    Killing is ignored: ages are defined with respect to the killing-free net.

    Raises:
        ParityError: start is not an odd site
        UndefinedArrowError: joint-mode kill site without kill-site resampling
    """
    check_parity(start.x, start.t, even=False)
    if depth < 0:
        raise ConfigurationError(f"depth must be >= 0, got {depth}")
    path = dual_web_paths(field, [start.x], start.t, depth, web)[:, 0]
    horizon = Termination(TerminationKind.HORIZON)
    return PathTrace(start, np.diff(path), horizon, time_step=-1)


def dual_web_paths(field: Environment, ys, t0: int, depth: int, web: Web) -> np.ndarray:
    """Dual web paths from many odd sites at time t0.

    Returns:
        int64 array of shape (depth + 1, len(ys)); row u holds positions at
        time t0 - u
    """
    ys = np.atleast_1d(np.asarray(ys, dtype=np.int64))
    out = np.empty((depth + 1, ys.size), dtype=np.int64)
    out[0] = ys
    for u in range(depth):
        out[u + 1] = out[u] + field.dual_web_directions(out[u], t0 - u, web)
    return out


def wedge_meet_depths(field: Environment, xs, ts, max_depth: int) -> np.ndarray:
    """First backward depth u >= 1 at which the two wedge walls meet.

    Vectorised over query sites; sites whose walls have met drop out of the
    active set.

    Returns:
        int64 array, NO_MEETING (-1) where the walls stay apart for max_depth steps
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=np.int64))
    ts = np.broadcast_to(np.asarray(ts, dtype=np.int64), xs.shape).copy()
    check_parity(xs, ts, even=True)
    if max_depth < 0:
        raise ConfigurationError(f"max_depth must be >= 0, got {max_depth}")

    meet = np.full(xs.shape, NO_MEETING, dtype=np.int64)
    left = xs + 1
    right = xs - 1
    active = np.arange(xs.size)
    for u in range(1, max_depth + 1):
        if active.size == 0:
            break
        now = ts[active] - (u - 1)
        left_a = left[active]
        right_a = right[active]
        left_a = left_a + field.dual_web_directions(left_a, now, Web.LEFT)
        right_a = right_a + field.dual_web_directions(right_a, now, Web.RIGHT)
        met = left_a == right_a
        meet[active[met]] = u
        left[active] = left_a
        right[active] = right_a
        active = active[~met]
    return meet


def wedge_ages(
    field: Environment, xs, ts, max_depth: int
) -> tuple[np.ndarray, np.ndarray]:
    """Ages of many even sites at once.

    Returns:
        (ages, censored): ages hold meet_depth - 1, or max_depth where the
        walls did not meet, flagged in the boolean `censored` array
    """
    meet = wedge_meet_depths(field, xs, ts, max_depth)
    censored = meet == NO_MEETING
    ages = np.where(censored, max_depth, meet - 1)
    return ages, censored


def wedge_walk(field: Environment, x: int, t: int, max_depth: int) -> WedgeWalk:
    check_parity(x, t, even=True)
    meet = int(wedge_meet_depths(field, x, t, max_depth)[0])
    depth = max_depth if meet == NO_MEETING else meet
    l_hat = trace_dual(field, LatticePoint(x + 1, t), Web.LEFT, depth)
    r_hat = trace_dual(field, LatticePoint(x - 1, t), Web.RIGHT, depth)
    return WedgeWalk(l_hat, r_hat, None if meet == NO_MEETING else meet)


def age_at(field: Environment, x: int, t: int, max_depth: int) -> int | Censored:
    """Largest delta with x in the point set started at t - delta.

    Returns:
        meet_depth - 1, or Censored(max_depth) when the walls do not meet
    """
    meet = int(wedge_meet_depths(field, x, t, max_depth)[0])
    if meet == NO_MEETING:
        return Censored(max_depth)
    return meet - 1


def membership(field: Environment, x: int, t: int, s: int) -> bool:
    """Whether x belongs to the killing-free point set started at time s, at time t.

    True iff the wedge walls from (x + 1, t) and (x - 1, t) do not meet at any
    backward time in [s, t).
    """
    check_parity(x, t, even=True)
    if s > t:
        raise ConfigurationError(f"membership requires s <= t, got s={s}, t={t}")
    if s == t:
        return True
    return bool(wedge_meet_depths(field, x, t, t - s)[0] == NO_MEETING)
