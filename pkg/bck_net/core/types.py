from dataclasses import dataclass
from enum import Enum, IntEnum

__all__: list[str] = [
    "OutcomeKind",
    "FieldMode",
    "Web",
    "Direction",
    "PathRule",
    "TerminationKind",
    "SiteOutcome",
    "ROTATION",
]


class OutcomeKind(IntEnum):
    BOTH = 0
    LEFT_ONLY = 1
    RIGHT_ONLY = 2
    KILL = 3


class FieldMode(str, Enum):
    JOINT = "joint"
    LAYERED = "layered"


class Web(str, Enum):
    LEFT = "left"
    RIGHT = "right"


class Direction(IntEnum):
    LEFT = -1
    RIGHT = 1


class PathRule(str, Enum):
    LEFTMOST = "leftmost"
    RIGHTMOST = "rightmost"
    UNIFORM_HOP = "uniform_hop"


class TerminationKind(str, Enum):
    HORIZON = "horizon"
    KILLED = "killed"
    EXITED_WINDOW = "exited_window"


# Forward kind at (x, t-1) -> dual kind at (x, t)
ROTATION: dict[OutcomeKind, OutcomeKind] = {
    OutcomeKind.BOTH: OutcomeKind.BOTH,
    OutcomeKind.LEFT_ONLY: OutcomeKind.RIGHT_ONLY,
    OutcomeKind.RIGHT_ONLY: OutcomeKind.LEFT_ONLY,
    OutcomeKind.KILL: OutcomeKind.KILL,
}


@dataclass(frozen=True)
class SiteOutcome:
    """Local outcome at one site: arrow kind plus the layered-mode kill mark."""

    kind: OutcomeKind
    kill_mark: bool = False

    @property
    def is_killing(self) -> bool:
        return self.kind == OutcomeKind.KILL or self.kill_mark
