from dataclasses import dataclass, replace

from bck_net.core import ConfigurationError, FieldMode

from .constants import EPS, SEED_LIMIT

__all__: list[str] = ["FieldParams"]


@dataclass(frozen=True)
class FieldParams:
    """Site-level parameters of one random environment.

    Attributes:
        mode: JOINT draws one of four outcomes per site; LAYERED draws the
            arrow kind and an independent kill mark
        b: Branch probability per site
        k: Kill probability per site
        seed: 64-bit environment seed
        resample_kill_arrows: Give joint-mode kill sites a latent arrow so the
            killing-free reference net is defined everywhere
    """

    mode: FieldMode = FieldMode.LAYERED
    b: float = 0.0
    k: float = 0.0
    seed: int = 0
    resample_kill_arrows: bool = False

    def __post_init__(self):
        object.__setattr__(self, "mode", FieldMode(self.mode))
        if not 0.0 <= self.b <= 1.0:
            raise ConfigurationError(
                f"branch probability b must lie in [0, 1], got {self.b}"
            )
        if not 0.0 <= self.k <= 1.0:
            raise ConfigurationError(
                f"kill probability k must lie in [0, 1], got {self.k}"
            )
        if self.mode == FieldMode.JOINT and self.b + self.k > 1.0 + EPS:
            raise ConfigurationError(
                f"joint mode requires b + k <= 1, got b={self.b}, k={self.k}"
            )
        if not 0 <= int(self.seed) < SEED_LIMIT:
            raise ConfigurationError(
                f"seed must be a 64-bit unsigned integer, got {self.seed}"
            )

    @property
    def joint_kill_threshold(self) -> float:
        """Kill threshold applied to non-branching sites in joint mode."""
        if self.b >= 1.0:
            return 0.0
        return min(1.0, self.k / (1.0 - self.b))

    def with_k(self, k: float) -> "FieldParams":
        return replace(self, k=k)
