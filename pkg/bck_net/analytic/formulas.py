import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erfc

from bck_net.core import DomainError

__all__: list[str] = [
    "DensityParams",
    "normal_cdf",
    "xi_density",
    "expected_aged_kill_count",
]


@dataclass(frozen=True)
class DensityParams:
    """Continuum branching rate b and elapsed time tau of the density formula."""

    b: float
    tau: float

    def __post_init__(self):
        if self.b < 0:
            raise DomainError(f"branching rate must be >= 0, got b={self.b}")
        if not self.tau > 0:
            raise DomainError(f"elapsed time must be > 0, got tau={self.tau}")


def normal_cdf(z):
    """Standard normal CDF through the complementary error function.

    erfc keeps full relative precision in the lower tail, where 1 - erf
    would cancel.
    """
    value = 0.5 * erfc(-np.asarray(z, dtype=np.float64) / math.sqrt(2.0))
    if np.ndim(value) == 0:
        return float(value)
    return value


def xi_density(params: DensityParams) -> float:
    """Expected number of points per unit length of the branching-coalescing
    point set started from the full line, after time tau:

        exp(-b^2 tau) / sqrt(pi tau) + 2 b Phi(b sqrt(2 tau))
    """
    b, tau = params.b, params.tau
    return math.exp(-b * b * tau) / math.sqrt(math.pi * tau) + 2.0 * b * normal_cdf(
        b * math.sqrt(2.0 * tau)
    )


def expected_aged_kill_count(k: float, box_area: float, b: float, eps: float) -> float:
    """Mean number of killing marks of age >= eps in a box of the given area."""
    if not eps > 0:
        raise DomainError(f"eps must be > 0, got {eps}")
    density = xi_density(DensityParams(b, eps))
    return k * box_area * density
