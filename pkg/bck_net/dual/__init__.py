__all__: list[str] = [
    "Censored",
    "WedgeWalk",
    "AgedKillPoint",
    "trace_dual",
    "dual_web_paths",
    "wedge_meet_depths",
    "wedge_ages",
    "wedge_walk",
    "age_at",
    "membership",
    "aged_kill_points",
    "kill_sites",
    "NO_MEETING",
]

from .kill_points import AgedKillPoint, aged_kill_points, kill_sites
from .wedge import (
    NO_MEETING,
    Censored,
    WedgeWalk,
    age_at,
    dual_web_paths,
    membership,
    trace_dual,
    wedge_ages,
    wedge_meet_depths,
    wedge_walk,
)
