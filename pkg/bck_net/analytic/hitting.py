import logging
import math

import numpy as np

from bck_net.core import BckNetError, DomainError

__all__: list[str] = [
    "wedge_step_probabilities",
    "hitting_survival_profile",
    "hitting_mass_defects",
    "hitting_survival",
    "lattice_density",
]

logger = logging.getLogger(__name__)

# Guard for the DP itself; the per-step defect stays far below this and is
# reported by hitting_mass_defects.
MASS_GUARD: float = 1e-9


def wedge_step_probabilities(b_site: float) -> tuple[float, float, float]:
    """(P(+1), P(-1), P(0)) of the half-separation walk of two dual walls."""
    up = (1.0 + b_site) ** 2 / 4.0
    down = (1.0 - b_site) ** 2 / 4.0
    stay = (1.0 - b_site * b_site) / 2.0
    return up, down, stay


def _run_dp(b_site: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    if not 0.0 <= b_site <= 1.0:
        raise DomainError(f"b_site must lie in [0, 1], got {b_site}")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")

    up, down, stay = wedge_step_probabilities(b_site)
    p = np.zeros(n + 2, dtype=np.float64)
    p[0] = 1.0
    absorbed = np.zeros(n + 1, dtype=np.float64)
    survival = np.ones(n + 1, dtype=np.float64)

    # After m steps only states 0..m carry mass, so the state space is never truncated
    for m in range(1, n + 1):
        width = m + 1
        prev = p[:width].copy()
        absorbed[m] = absorbed[m - 1] + down * prev[0]
        p[:width] = stay * prev
        p[1 : width + 1] += up * prev
        p[: width - 1] += down * prev[1:]
        survival[m] = p[: width + 1].sum()
    return survival, absorbed


def hitting_survival_profile(b_site: float, n: int) -> np.ndarray:
    """P(v > m) for m = 0..n, where v is the first time the walk started at 0
    with steps +1, -1, 0 of probabilities (1+b)^2/4, (1-b)^2/4, (1-b^2)/2
    hits -1.

    Raises:
        DomainError: b_site outside [0, 1] or n < 0
        BckNetError: probability mass not conserved
    """
    survival, absorbed = _run_dp(b_site, n)
    defect = float(np.max(np.abs(survival + absorbed - 1.0)))
    if defect > MASS_GUARD:
        raise BckNetError(f"hitting-time DP lost probability mass: {defect:.3e}")
    return survival


def hitting_mass_defects(b_site: float, n: int) -> np.ndarray:
    """retained + absorbed - 1 after each of the n steps (0 in exact arithmetic)."""
    survival, absorbed = _run_dp(b_site, n)
    return survival + absorbed - 1.0


def hitting_survival(b_site: float, n: int) -> float:
    """Exact P(v > n) for the absorbed wedge walk."""
    return float(hitting_survival_profile(b_site, n)[-1])


def lattice_density(beta: float, n: int, b_site: float | None = None) -> float:
    """Points per macroscopic unit length after n lattice steps.

    The even sublattice holds one site per two length units, so the density
    is (e^beta / 2) P(v > n). With b_site = e^-beta it converges to
    xi_density(1, n e^-2beta).
    """
    if b_site is None:
        b_site = math.exp(-beta)
    return 0.5 * math.exp(beta) * hitting_survival(b_site, n)
