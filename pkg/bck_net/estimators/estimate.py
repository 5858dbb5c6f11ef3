import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from bck_net.core import ConfigurationError

from .constants import N_STANDARD_ERRORS

__all__: list[str] = ["Estimate"]


@dataclass(frozen=True)
class Estimate:
    """Replicate mean with its standard error and optional references.

    Attributes:
        quantity: Name of the estimated quantity
        mean: Mean over replicates
        std_error: Sample standard deviation / sqrt(replicates)
        replicates: Number of replicates
        reference: Continuum value from the closed-form formulas, if any
        lattice_reference: Exact expectation on the lattice actually simulated
        notes: Free text (rounding applied, external constants, ...)
        extras: Further named summary values (quantiles, p-values, ...)
    """

    quantity: str
    mean: float
    std_error: float
    replicates: int
    reference: float | None = None
    lattice_reference: float | None = None
    notes: str = ""
    extras: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.replicates < 1:
            raise ConfigurationError(
                f"an estimate needs >= 1 replicate, got {self.replicates}"
            )
        if self.std_error < 0:
            raise ConfigurationError(f"std_error must be >= 0, got {self.std_error}")

    @classmethod
    def from_samples(
        cls,
        quantity: str,
        samples,
        reference: float | None = None,
        lattice_reference: float | None = None,
        notes: str = "",
        extras: dict[str, float] | None = None,
    ) -> "Estimate":
        values = np.asarray(samples, dtype=np.float64)
        n = int(values.size)
        if n == 0:
            raise ConfigurationError(f"no samples for {quantity}")
        mean = float(values.mean())
        std_error = float(values.std(ddof=1) / math.sqrt(n)) if n > 1 else 0.0
        return cls(
            quantity=quantity,
            mean=mean,
            std_error=std_error,
            replicates=n,
            reference=reference,
            lattice_reference=lattice_reference,
            notes=notes,
            extras=dict(extras or {}),
        )

    def deviation(self, target: float | None = None) -> float:
        """mean - target, defaulting to the continuum reference."""
        target = self.reference if target is None else target
        if target is None:
            raise ConfigurationError(
                f"{self.quantity} has no reference to compare against"
            )
        return self.mean - target

    def z_score(self, target: float | None = None) -> float:
        diff = self.deviation(target)
        if self.std_error == 0:
            return 0.0 if diff == 0 else math.copysign(math.inf, diff)
        return diff / self.std_error

    def within(
        self, n_se: float = N_STANDARD_ERRORS, target: float | None = None
    ) -> bool:
        return abs(self.deviation(target)) <= n_se * self.std_error

    @property
    def upper_bound(self) -> float:
        """Mean plus three standard errors."""
        return self.mean + N_STANDARD_ERRORS * self.std_error

    def to_row(self) -> dict[str, Any]:
        return {
            "quantity": self.quantity,
            "mean": self.mean,
            "std_error": self.std_error,
            "reference": self.reference,
            "replicates": self.replicates,
            "lattice_reference": self.lattice_reference,
            "notes": self.notes,
        }

    def __str__(self) -> str:
        ref = "" if self.reference is None else f" (reference {self.reference:.6g})"
        return f"{self.quantity} = {self.mean:.6g} +/- {self.std_error:.3g}{ref}"
