import logging
from dataclasses import dataclass

import numpy as np

from bck_net.core import ConfigurationError, Environment, LatticeBox

from .wedge import Censored, wedge_ages

__all__: list[str] = ["AgedKillPoint", "aged_kill_points", "kill_sites"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AgedKillPoint:
    x: int
    t: int
    age: int | Censored

    @property
    def is_censored(self) -> bool:
        return isinstance(self.age, Censored)


def kill_sites(field: Environment, box: LatticeBox) -> tuple[np.ndarray, np.ndarray]:
    """Kill sites and kill marks of the field inside `box`."""
    xs, ts = box.even_sites()
    if xs.size == 0:
        return xs, ts
    mask = field.killing_mask(xs, ts)
    return xs[mask], ts[mask]


def aged_kill_points(
    field: Environment, box: LatticeBox, epsilon_steps: int, max_depth: int
) -> list[AgedKillPoint]:
    """Killing points in `box` whose age in the killing-free net is >= epsilon_steps.

    Censored ages count as old enough because max_depth >= epsilon_steps.

    Raises:
        ConfigurationError: epsilon_steps < 1 or max_depth < epsilon_steps
    """
    if epsilon_steps < 1:
        raise ConfigurationError(f"epsilon_steps must be >= 1, got {epsilon_steps}")
    if max_depth < epsilon_steps:
        raise ConfigurationError(
            f"max_depth ({max_depth}) must be >= epsilon_steps ({epsilon_steps})"
        )

    kx, kt = kill_sites(field, box)
    if kx.size == 0:
        return []
    ages, censored = wedge_ages(field, kx, kt, max_depth)
    keep = censored | (ages >= epsilon_steps)
    logger.debug(
        f"{int(keep.sum())} of {kx.size} kill points have age >= {epsilon_steps}"
    )
    return [
        AgedKillPoint(int(x), int(t), Censored(max_depth) if c else int(a))
        for x, t, a, c in zip(kx[keep], kt[keep], ages[keep], censored[keep])
    ]
