import logging
import math
from dataclasses import dataclass, replace

from bck_net.core import ConfigurationError, FieldMode, LatticePoint
from bck_net.field import ArrowField, FieldParams, derive_seed

__all__: list[str] = ["rescale", "length_unit", "time_unit", "ScaledConfig"]

logger = logging.getLogger(__name__)

ROUNDING_RULE: str = "lengths to nearest even integer; times to nearest integer >= 1"


def length_unit(beta: float) -> float:
    return math.exp(beta)


def time_unit(beta: float) -> float:
    return math.exp(2.0 * beta)


def rescale(p: LatticePoint, beta: float) -> tuple[float, float]:
    """Diffusive rescaling: space shrinks by e^-beta, time by e^-2beta."""
    return p.x * math.exp(-beta), p.t * math.exp(-2.0 * beta)


@dataclass(frozen=True)
class ScaledConfig:
    """Macroscopic model parameters and their lattice counterparts at scale beta.

    Branching scales as b e^-beta and killing as k e^-2beta; one macroscopic
    length unit is e^beta lattice steps, one time unit e^2beta steps.
    """

    mode: FieldMode = FieldMode.LAYERED
    b: float = 1.0
    k: float = 0.0
    beta: float = 0.0
    resample: bool = False

    def __post_init__(self):
        object.__setattr__(self, "mode", FieldMode(self.mode))
        if self.beta < 0:
            raise ConfigurationError(f"beta must be >= 0, got {self.beta}")
        if self.b < 0 or self.k < 0:
            raise ConfigurationError(
                f"b and k must be >= 0, got b={self.b}, k={self.k}"
            )
        if self.b_site > 1.0:
            raise ConfigurationError(
                f"site branch probability b e^-beta = {self.b_site:.6g} "
                "exceeds 1; raise beta"
            )
        if self.k_site > 1.0:
            raise ConfigurationError(
                f"site kill probability k e^-2beta = {self.k_site:.6g} "
                "exceeds 1; raise beta"
            )
        # FieldParams carries the joint-mode b + k <= 1 check
        self.field_params(0)

    @property
    def b_site(self) -> float:
        return self.b * math.exp(-self.beta)

    @property
    def k_site(self) -> float:
        return self.k * math.exp(-2.0 * self.beta)

    @property
    def length_unit(self) -> float:
        return length_unit(self.beta)

    @property
    def time_unit(self) -> float:
        return time_unit(self.beta)

    def lattice_length(self, length: float) -> int:
        """Nearest even integer to length * e^beta."""
        return 2 * math.floor(length * self.length_unit / 2.0 + 0.5)

    def lattice_time(self, t: float) -> int:
        """Nearest integer to t * e^2beta, at least 1 unless t is 0."""
        if t == 0:
            return 0
        return max(1, math.floor(t * self.time_unit + 0.5))

    def macro_time(self, steps: int) -> float:
        return steps / self.time_unit

    def field_params(self, seed: int) -> FieldParams:
        return FieldParams(self.mode, self.b_site, self.k_site, seed, self.resample)

    def field_for(self, seed: int, replicate: int) -> ArrowField:
        """Environment of replicate `replicate`; all k values share it."""
        return ArrowField(self.field_params(derive_seed(seed, replicate)))

    def with_k(self, k: float) -> "ScaledConfig":
        return replace(self, k=k)

    def with_b(self, b: float) -> "ScaledConfig":
        return replace(self, b=b)

    def with_beta(self, beta: float) -> "ScaledConfig":
        return replace(self, beta=beta)

    def for_reference_net(self) -> "ScaledConfig":
        """Joint-mode kill sites get a latent arrow so the killing-free net exists."""
        if self.mode == FieldMode.JOINT and not self.resample:
            return replace(self, resample=True)
        return self

    def describe(self) -> str:
        return (
            f"beta={self.beta:g} b_site={self.b_site:.6g} k_site={self.k_site:.6g} "
            f"({ROUNDING_RULE})"
        )
