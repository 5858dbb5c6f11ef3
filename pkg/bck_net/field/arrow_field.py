import logging

from bck_net.core import Environment, FieldMode

from .outcome_mixin import OutcomeMixin
from .params import FieldParams
from .variates_mixin import VariatesMixin

__all__: list[str] = ["ArrowField"]

logger = logging.getLogger(__name__)


class ArrowField(VariatesMixin, OutcomeMixin, Environment):
    """Lazily evaluated random environment on the infinite even sublattice.

    Nothing is stored: every query hashes (seed, stream, x, t), so any two
    ArrowField instances built from equal parameters agree at every site and
    fields differing only in k share their arrows and kill variates.
    """

    def __init__(self, params: FieldParams):
        """
        Args:
            params: Mode, site probabilities and seed of the environment
        """
        self.params = params
        VariatesMixin.__init__(self, params.seed)
        logger.debug(
            f"ArrowField created: mode={params.mode.value}, b={params.b}, "
            f"k={params.k}, seed={params.seed}"
        )

    @classmethod
    def create(
        cls,
        mode: FieldMode | str,
        b: float,
        k: float,
        seed: int,
        resample_kill_arrows: bool = False,
    ) -> "ArrowField":
        return cls(FieldParams(FieldMode(mode), b, k, seed, resample_kill_arrows))

    @property
    def mode(self) -> FieldMode:
        return self.params.mode

    @property
    def has_latent_arrows(self) -> bool:
        return self.params.mode == FieldMode.JOINT and self.params.resample_kill_arrows

    @property
    def seed(self) -> int:
        return self.params.seed

    def with_k(self, k: float) -> "ArrowField":
        """Same arrows and kill variates with a different kill probability."""
        return ArrowField(self.params.with_k(k))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ArrowField) and other.params == self.params

    def __hash__(self) -> int:
        return hash(self.params)

    def __repr__(self) -> str:
        return (
            f"ArrowField(mode={self.params.mode.value}, b={self.params.b}, "
            f"k={self.params.k}, seed={self.params.seed})"
        )
