import logging
from dataclasses import dataclass, field

import numpy as np

from bck_net.core import ConfigurationError, Environment, FieldMode, LatticeBox, Web
from bck_net.dual import dual_web_paths, wedge_ages
from bck_net.field import ArrowField, FieldParams, StoredLattice, derive_seed
from bck_net.walkers import web_paths

__all__: list[str] = [
    "MAX_ORACLE_SIZE",
    "Discrepancy",
    "OracleReport",
    "stored_lattice",
    "forward_ages",
    "crossing_audit",
    "check_lattice",
    "oracle_check",
]

logger = logging.getLogger(__name__)

MAX_ORACLE_SIZE: int = 60


@dataclass(frozen=True)
class Discrepancy:
    """A site where two independent computations disagree."""

    check: str
    x: int
    t: int
    b: float
    k: float
    replicate: int
    detail: str = ""

    def __str__(self) -> str:
        return (
            f"{self.check} at ({self.x}, {self.t}) b={self.b:g} k={self.k:g} "
            f"replicate={self.replicate} {self.detail}"
        ).rstrip()


@dataclass
class OracleReport:
    lattices: int = 0
    sites: int = 0
    discrepancies: list[Discrepancy] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.discrepancies


def stored_lattice(
    source: Environment, width: int, height: int, corrupt_rotation: bool = False
) -> StoredLattice:
    """Materialise what the checks on [0, width) x [0, height) read.

    Dual paths from the top row spread at most height + 1 sites sideways, and
    forward paths and ages need the same margin.
    """
    margin = height + 1
    box = LatticeBox(-margin, width - 1 + margin, 0, max(0, height - 1))
    return StoredLattice(source, box, corrupt_rotation=corrupt_rotation)


def forward_ages(env: Environment, box: LatticeBox) -> np.ndarray:
    """Ages by forward recursion over ancestors, capped at the time since t_lo.

    age(x, t) = 1 + max age of the sites at t - 1 with an arrow into x, or 0
    when there is none. Killing is ignored. Returns an (nt, nx) array with -1
    at odd sites; values within distance t - t_lo of the box edges are not
    reliable.
    """
    nx = box.x_hi - box.x_lo + 1
    nt = box.t_hi - box.t_lo + 1
    ages = np.full((nt, nx), -1, dtype=np.int64)
    xs = np.arange(box.x_lo, box.x_hi + 1, dtype=np.int64)
    ages[0, (xs + box.t_lo) % 2 == 0] = 0
    for row in range(1, nt):
        t = box.t_lo + row
        prev = ages[row - 1]
        src = xs[prev >= 0]
        left, right = env.offspring(src, t - 1, killing=False)
        best = np.full(nx, -1, dtype=np.int64)
        src_age = prev[prev >= 0]
        for mask, shift in ((left, -1), (right, 1)):
            target = src[mask] + shift
            inside = (target >= box.x_lo) & (target <= box.x_hi)
            np.maximum.at(best, target[inside] - box.x_lo, src_age[mask][inside] + 1)
        even = (xs + t) % 2 == 0
        ages[row] = np.where(even, np.maximum(best, 0), -1)
    return ages


def crossing_audit(
    env: Environment, width: int, height: int, web: Web
) -> list[tuple[int, int, str]]:
    """Forward web paths from the bottom row never cross dual web paths from
    the top row.

    Forward paths live on even sites and dual paths on odd ones, so they can
    only cross by swapping order between consecutive times.

    Returns:
        (x, t, description) for every detected crossing
    """
    if height < 2 or width < 1:
        return []
    top = height - 1
    fwd_starts = np.arange(0, width, dtype=np.int64)
    fwd_starts = fwd_starts[fwd_starts % 2 == 0]
    dual_starts = np.arange(0, width, dtype=np.int64)
    dual_starts = dual_starts[(dual_starts + top) % 2 == 1]
    if fwd_starts.size == 0 or dual_starts.size == 0:
        return []

    forward = web_paths(env, fwd_starts, 0, top, web)
    dual = dual_web_paths(env, dual_starts, top, top, web)[::-1]
    sign = np.sign(forward[:, :, None] - dual[:, None, :])
    flips = np.argwhere(sign[1:] != sign[:-1])
    found = []
    for u, i, j in flips:
        found.append(
            (
                int(forward[u, i]),
                int(u),
                f"{web.value}-web forward path from ({fwd_starts[i]}, 0) crosses dual "
                f"path from ({dual_starts[j]}, {top}) between t={u} and t={u + 1}",
            )
        )
    return found


def check_lattice(
    env: Environment, width: int, height: int
) -> list[tuple[str, int, int, str]]:
    """Compare dual-wedge ages with forward ancestry ages on every even site of
    [0, width) x [0, height), then run the crossing audit for both webs."""
    found = []
    if height >= 1 and width >= 1:
        margin = height + 1
        wide = LatticeBox(-margin, width - 1 + margin, 0, height - 1)
        fwd = forward_ages(env, wide)
        xs, ts = LatticeBox(0, width - 1, 0, height - 1).even_sites()
        expected = fwd[ts, xs + margin]
        for t in np.unique(ts):
            at_t = ts == t
            ages, censored = wedge_ages(env, xs[at_t], t, int(t))
            dual = np.where(censored, t, ages)
            bad = np.flatnonzero(dual != expected[at_t])
            for idx in bad:
                found.append(
                    (
                        "membership",
                        int(xs[at_t][idx]),
                        int(t),
                        f"wedge age {int(dual[idx])} != "
                        f"forward age {int(expected[at_t][idx])}",
                    )
                )
    for web in (Web.LEFT, Web.RIGHT):
        for x, t, detail in crossing_audit(env, width, height, web):
            found.append(("non-crossing", x, t, detail))
    return found


def oracle_check(
    width: int,
    height: int,
    reps: int,
    b_grid=(0.0, 0.3, 1.0),
    k_grid=(0.0, 0.2),
    mode: FieldMode = FieldMode.LAYERED,
    seed: int = 0,
    corrupt_rotation: bool = False,
    max_reported: int = 20,
) -> OracleReport:
    """Duality self-test on fully stored lattices.

    For every replicate and every (b, k) the environment is materialised on a
    finite box, and membership computed through the dual wedge is compared
    site by site with forward reachability; the non-crossing of forward and
    dual webs is audited as well. Any disagreement is a discrepancy.

    Raises:
        ConfigurationError: width or height exceeds MAX_ORACLE_SIZE or is < 1
    """
    if not (1 <= width <= MAX_ORACLE_SIZE and 1 <= height <= MAX_ORACLE_SIZE):
        raise ConfigurationError(
            f"oracle lattices are limited to 1..{MAX_ORACLE_SIZE} per side, "
            f"got {width}x{height}"
        )
    mode = FieldMode(mode)
    report = OracleReport()
    sites_per_lattice = LatticeBox(0, width - 1, 0, height - 1).n_even_sites
    logger.info(
        f"oracle: {reps} replicates of {width}x{height} "
        f"over b={list(b_grid)}, k={list(k_grid)}"
    )
    for r in range(reps):
        replicate_seed = derive_seed(seed, r)
        for b in b_grid:
            for k in k_grid:
                resample = mode == FieldMode.JOINT
                params = FieldParams(mode, b, k, replicate_seed, resample)
                env = stored_lattice(
                    ArrowField(params), width, height, corrupt_rotation
                )
                report.lattices += 1
                report.sites += sites_per_lattice
                for check, x, t, detail in check_lattice(env, width, height):
                    report.discrepancies.append(
                        Discrepancy(check, x, t, b, k, r, detail)
                    )
                if len(report.discrepancies) >= max_reported:
                    logger.warning(
                        f"oracle: stopping after {len(report.discrepancies)} "
                        "discrepancies"
                    )
                    return report
    return report
