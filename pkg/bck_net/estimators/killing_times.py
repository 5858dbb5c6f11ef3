import logging
from dataclasses import dataclass

import numpy as np

from bck_net.core import ConfigurationError, Environment
from bck_net.walkers import PointSet, ScaledConfig, evolve_in_cone

from .constants import FALLBACK_BETA, MAX_CONE_WIDTH

__all__: list[str] = ["KillingTime", "first_killing_time", "feasible_config"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KillingTime:
    """First time the point set started from the full line meets a killing site.

    Attributes:
        start: Lattice time the point set was started
        time: Lattice time of the first hit, or None if censored at the horizon
        sites: Positions of the killing sites hit at `time`
        points: Core positions of the point set at `time`
    """

    start: int
    time: int | None
    sites: np.ndarray
    points: np.ndarray

    @property
    def censored(self) -> bool:
        return self.time is None

    @property
    def unique(self) -> bool:
        return self.sites.size == 1

    @property
    def elapsed(self) -> int | None:
        return None if self.time is None else self.time - self.start


def first_killing_time(
    field: Environment, half_width: int, start: int, horizon: int
) -> KillingTime:
    """First t > start at which the killing-free point set started from the
    full line at `start` has a point in [-half_width, half_width] on a
    killing site.

    The set is evolved inside the light cone of the core up to start +
    horizon, so the answer is exact without a spatial buffer.
    """
    if horizon < 1:
        raise ConfigurationError(f"horizon must be >= 1, got {horizon}")
    initial = PointSet.full(-half_width - horizon, half_width + horizon, start)
    empty = np.zeros(0, dtype=np.int64)
    cone = evolve_in_cone(
        field, initial, -half_width, half_width, horizon, killing=False
    )
    for ps in cone:
        core = ps.restrict(-half_width, half_width).positions
        if core.size == 0:
            continue
        hit = field.killing_mask(core, ps.time)
        if hit.any():
            return KillingTime(start, ps.time, core[hit], core)
    return KillingTime(start, None, empty, empty)


def feasible_config(
    cfg: ScaledConfig, half_width_macro: float, horizon_macro: float
) -> ScaledConfig:
    """Config whose full-line light cone fits MAX_CONE_WIDTH.

    Degrades beta to FALLBACK_BETA with a warning when possible.

    Raises:
        ConfigurationError: the cone does not fit even at the fallback beta
    """

    def width(c: ScaledConfig) -> int:
        return 2 * (c.lattice_length(half_width_macro) + c.lattice_time(horizon_macro))

    if width(cfg) <= MAX_CONE_WIDTH:
        return cfg
    if cfg.beta > FALLBACK_BETA:
        fallback = cfg.with_beta(FALLBACK_BETA)
        if width(fallback) <= MAX_CONE_WIDTH:
            logger.warning(
                f"Light cone of width {width(cfg)} exceeds {MAX_CONE_WIDTH} "
                f"at beta={cfg.beta}; "
                f"running at beta={FALLBACK_BETA}"
            )
            return fallback
    raise ConfigurationError(
        f"light cone of width {width(cfg)} exceeds {MAX_CONE_WIDTH} lattice sites; "
        "choose a smaller beta"
    )
