import logging
from dataclasses import dataclass

import numpy as np

from bck_net.core import (
    ConfigurationError,
    Environment,
    LatticePoint,
    PathRule,
    TerminationKind,
    Web,
    Window,
    check_parity,
)

__all__: list[str] = ["Termination", "PathTrace", "trace_path", "web_paths"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Termination:
    kind: TerminationKind
    at: LatticePoint | None = None

    def __str__(self) -> str:
        if self.at is None:
            return self.kind.value
        return f"{self.kind.value}@{self.at}"


@dataclass(frozen=True, eq=False)
class PathTrace:
    """One walker trajectory.

    `steps` holds the +/-1 displacements; `time_step` is +1 for forward
    paths and -1 for dual paths traced backward in time.
    """

    start: LatticePoint
    steps: np.ndarray
    termination: Termination
    time_step: int = 1

    def __post_init__(self):
        steps = np.asarray(self.steps, dtype=np.int8).reshape(-1)
        object.__setattr__(self, "steps", steps)

    def __len__(self) -> int:
        return int(self.steps.size)

    @property
    def positions(self) -> np.ndarray:
        out = np.empty(self.steps.size + 1, dtype=np.int64)
        out[0] = self.start.x
        np.cumsum(self.steps, dtype=np.int64, out=out[1:])
        out[1:] += self.start.x
        return out

    @property
    def times(self) -> np.ndarray:
        offsets = np.arange(self.steps.size + 1, dtype=np.int64)
        return self.start.t + self.time_step * offsets

    @property
    def end(self) -> LatticePoint:
        return LatticePoint(int(self.positions[-1]), int(self.times[-1]))

    def position_at(self, t: int) -> int:
        u = (t - self.start.t) * self.time_step
        if not 0 <= u <= self.steps.size:
            raise ConfigurationError(f"time {t} is outside the traced range of {self}")
        return int(self.start.x + self.steps[:u].sum(dtype=np.int64))

    def __repr__(self) -> str:
        return (
            f"PathTrace(start={self.start}, steps={len(self)}, "
            f"termination={self.termination})"
        )


def _direction(field: Environment, x: int, t: int, rule: PathRule) -> int:
    if rule == PathRule.LEFTMOST:
        return int(field.web_directions(x, t, Web.LEFT)[0])
    if rule == PathRule.RIGHTMOST:
        return int(field.web_directions(x, t, Web.RIGHT)[0])
    return int(field.hop_directions(x, t)[0])


def trace_path(
    field: Environment,
    start: LatticePoint,
    rule: PathRule,
    horizon: int,
    killing: bool = True,
    window: Window | None = None,
) -> PathTrace:
    """Follow one path of the net from `start` for up to `horizon` steps.

    Leftmost and rightmost paths follow the left and right webs; the uniform
    hop path picks one of the two arrows at branch sites using its own
    variate stream, so all three rules read the same environment.

    Raises:
        ParityError: start is not an even site
        UndefinedArrowError: killing is off at a joint-mode kill site without
            kill-site resampling
    """
    check_parity(start.x, start.t, even=True)
    if horizon < 0:
        raise ConfigurationError(f"horizon must be >= 0, got {horizon}")
    rule = PathRule(rule)

    steps = np.zeros(horizon, dtype=np.int8)
    x, t = start.x, start.t
    for n in range(horizon):
        if killing and field.killing_mask(x, t)[0]:
            killed = Termination(TerminationKind.KILLED, LatticePoint(x, t))
            return PathTrace(start, steps[:n], killed)
        d = _direction(field, x, t, rule)
        steps[n] = d
        x += d
        t += 1
        if window is not None and not window.sim_lo <= x <= window.sim_hi:
            return PathTrace(
                start,
                steps[: n + 1],
                Termination(TerminationKind.EXITED_WINDOW, LatticePoint(x, t)),
            )
    return PathTrace(start, steps, Termination(TerminationKind.HORIZON))


def web_paths(field: Environment, xs, t0: int, steps: int, web: Web) -> np.ndarray:
    """Positions of left- or right-web paths from many starts at once.

    Killing is ignored. Row u holds the positions at time t0 + u.

    Returns:
        int64 array of shape (steps + 1, len(xs))
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=np.int64))
    check_parity(xs, t0, even=True)
    out = np.empty((steps + 1, xs.size), dtype=np.int64)
    out[0] = xs
    for u in range(steps):
        out[u + 1] = out[u] + field.web_directions(out[u], t0 + u, web)
    return out
