import logging
import math

import numpy as np

from bck_net.core import ConfigurationError, Estimator
from bck_net.simulation.runner import ReplicateRunner, default_runner
from bck_net.walkers import PointSet, ScaledConfig, step_point_set

from .constants import ORIENTED_SITE_PC
from .estimate import Estimate

__all__: list[str] = [
    "crosses_block",
    "block_crossing",
    "min_crossing",
    "BlocksEstimator",
]

logger = logging.getLogger(__name__)

DEFAULT_OFFSETS: tuple[float, ...] = (-2.0, -1.0, 0.0, 1.0, 2.0)


def crosses_block(field, v: int, m: int, n: int) -> bool:
    """Whether the killed net from (v, 0), confined to [-3m, 3m], reaches both
    [-3m, -m] and [m, 3m] at time n."""
    ps = PointSet.single(v, 0)
    for _ in range(n):
        if ps.is_empty:
            return False
        ps = step_point_set(field, ps, killing=True, bounds=(-3 * m, 3 * m))
    pos = ps.positions
    return bool(np.any(pos <= -m) and np.any(pos >= m))


def _even_offset(v: float, m: int) -> int:
    return 2 * math.floor(v * m / 2.0 + 0.5)


def block_crossing(
    cfg: ScaledConfig,
    m_macro: float,
    n_macro: float,
    v_offsets=DEFAULT_OFFSETS,
    reps: int = 100,
    seed: int = 0,
    runner: ReplicateRunner | None = None,
) -> list[Estimate]:
    """Probability of the renormalisation event A_v for each start offset v.

    Offsets are in units of m, rounded to even lattice sites, and must lie in
    [-2, 2]. The oriented site percolation threshold is attached as an
    external comparison constant.
    """
    if m_macro <= 0 or n_macro <= 0:
        raise ConfigurationError(f"m and n must be > 0, got m={m_macro}, n={n_macro}")
    runner = default_runner(runner)
    m = max(2, cfg.lattice_length(m_macro))
    n = cfg.lattice_time(n_macro)
    vs = [_even_offset(v, m) for v in v_offsets]
    bad = [v for v in vs if abs(v) > 2 * m]
    if bad:
        raise ConfigurationError(
            f"offsets {bad} lie outside [-2m, 2m] = [{-2 * m}, {2 * m}]"
        )
    logger.info(f"blocks: m={m}, n={n}, offsets {vs}, {reps} replicates")

    def replicate(r: int) -> list[bool]:
        field = cfg.field_for(seed, r)
        return [crosses_block(field, v, m, n) for v in vs]

    hits = np.array(runner.map(replicate, reps), dtype=np.float64)
    hits = hits.reshape(reps, len(vs))
    return [
        Estimate.from_samples(
            f"A_v[v={v}]",
            hits[:, i],
            notes=(
                f"m={m} n={n}; p_c={ORIENTED_SITE_PC} "
                "(external oriented site percolation)"
            ),
            extras={"v": float(v), "p_c": ORIENTED_SITE_PC},
        )
        for i, v in enumerate(vs)
    ]


def min_crossing(
    cfg: ScaledConfig,
    m_macro: float,
    n_macro: float,
    reps: int = 100,
    seed: int = 0,
    runner: ReplicateRunner | None = None,
    v_offsets=DEFAULT_OFFSETS,
) -> Estimate:
    """min over v of P(A_v), compared against the oriented percolation threshold."""
    estimates = block_crossing(cfg, m_macro, n_macro, v_offsets, reps, seed, runner)
    worst = min(estimates, key=lambda e: e.mean)
    return Estimate(
        "min_A_v",
        worst.mean,
        worst.std_error,
        worst.replicates,
        reference=ORIENTED_SITE_PC,
        notes=f"argmin v={worst.extras['v']:g}; reference is the external p_c",
        extras={
            "v": worst.extras["v"],
            "exceeds_p_c": float(worst.mean > ORIENTED_SITE_PC),
        },
    )


class BlocksEstimator(Estimator):
    """Crossing probabilities of the renormalisation blocks [-3m, 3m] x [0, n]."""

    def __init__(self):
        super().__init__(self.get_name())

    @classmethod
    def get_name(cls) -> str:
        return "blocks"

    @classmethod
    def get_default_parameters(cls):
        return {
            "m": {"type": "float", "label": "Block half-unit m", "min": 0.0},
            "n": {"type": "float", "label": "Block height n", "min": 0.0},
            "v": {"type": "float_list", "label": "Start offsets in units of m"},
        }

    def run(self, config, runner):
        offsets = config.v or DEFAULT_OFFSETS
        estimates = block_crossing(
            config.scaled, config.m, config.n, offsets, config.reps, config.seed, runner
        )
        worst = min(estimates, key=lambda e: e.mean)
        logger.info(
            f"blocks: min P(A_v) = {worst.mean:.4f} at v={worst.extras['v']:g} "
            f"(p_c = {ORIENTED_SITE_PC}, external)"
        )
        return estimates
