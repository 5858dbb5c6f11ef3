__all__: list[str] = [
    "Environment",
    "Estimator",
    "LatticePoint",
    "LatticeBox",
    "Window",
    "OutcomeKind",
    "FieldMode",
    "Web",
    "PathRule",
    "BckNetError",
    "ConfigurationError",
    "ArrowField",
    "FieldParams",
    "StoredLattice",
    "PointSet",
    "PathTrace",
    "ScaledConfig",
    "Censored",
    "WedgeWalk",
    "AgedKillPoint",
    "Estimate",
    "RunConfig",
    "ReplicateRunner",
    "get_supported_estimators",
]

from bck_net.core import (
    BckNetError,
    ConfigurationError,
    Environment,
    Estimator,
    FieldMode,
    LatticeBox,
    LatticePoint,
    OutcomeKind,
    PathRule,
    Web,
    Window,
)
from bck_net.dual import AgedKillPoint, Censored, WedgeWalk
from bck_net.estimators import Estimate, get_supported_estimators
from bck_net.field import ArrowField, FieldParams, StoredLattice
from bck_net.simulation import ReplicateRunner, RunConfig
from bck_net.walkers import PathTrace, PointSet, ScaledConfig
