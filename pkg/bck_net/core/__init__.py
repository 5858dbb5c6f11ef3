__all__: list[str] = [
    "Environment",
    "Estimator",
    "LatticePoint",
    "LatticeBox",
    "Window",
    "check_parity",
    "parity_sites",
    "OutcomeKind",
    "FieldMode",
    "Web",
    "Direction",
    "PathRule",
    "TerminationKind",
    "SiteOutcome",
    "ROTATION",
    "BckNetError",
    "ParityError",
    "UndefinedArrowError",
    "InexactBoundaryError",
    "ConfigurationError",
    "DomainError",
    "CouplingViolationError",
]

from .environment import Environment
from .errors import (
    BckNetError,
    ConfigurationError,
    CouplingViolationError,
    DomainError,
    InexactBoundaryError,
    ParityError,
    UndefinedArrowError,
)
from .estimator import Estimator
from .lattice import LatticeBox, LatticePoint, Window, check_parity, parity_sites
from .types import (
    ROTATION,
    Direction,
    FieldMode,
    OutcomeKind,
    PathRule,
    SiteOutcome,
    TerminationKind,
    Web,
)
