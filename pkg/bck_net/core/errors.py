__all__: list[str] = [
    "BckNetError",
    "ParityError",
    "UndefinedArrowError",
    "InexactBoundaryError",
    "ConfigurationError",
    "DomainError",
    "CouplingViolationError",
]


class BckNetError(Exception):
    """Base class for every error raised by the simulator."""


class ParityError(BckNetError, ValueError):
    """A site was queried on the wrong sublattice."""


class UndefinedArrowError(BckNetError):
    """A joint-mode kill site was asked for an arrow it does not carry."""


class InexactBoundaryError(BckNetError):
    """The simulation buffer is narrower than the light cone of the query."""


class ConfigurationError(BckNetError, ValueError):
    """Invalid parameter value or combination."""


class DomainError(BckNetError, ValueError):
    """Analytic formula evaluated outside its domain."""


class CouplingViolationError(BckNetError):
    """An exact coupling assertion failed."""
