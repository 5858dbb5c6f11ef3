from abc import ABC, abstractmethod

import numpy as np

from .errors import UndefinedArrowError
from .lattice import LatticePoint, check_parity
from .types import ROTATION, Direction, FieldMode, OutcomeKind, SiteOutcome, Web

__all__: list[str] = ["Environment"]


def _as_sites(xs, ts) -> tuple[np.ndarray, np.ndarray]:
    xs = np.atleast_1d(np.asarray(xs, dtype=np.int64))
    ts = np.broadcast_to(np.asarray(ts, dtype=np.int64), xs.shape)
    return xs, ts


class Environment(ABC):
    """Abstract random environment of the branching-coalescing-killing model.

    Implementations supply four vectorised primitives (arrow kinds, kill marks,
    latent arrows of joint-mode kill sites and the uniform-hop variate); every
    forward, web and dual query is derived from them here, so all views of
    one environment stay mutually consistent.
    """

    @property
    @abstractmethod
    def mode(self) -> FieldMode:
        """Parameterisation of the environment (joint or layered)."""
        pass

    @property
    @abstractmethod
    def has_latent_arrows(self) -> bool:
        """Whether joint-mode kill sites carry a resampled arrow."""
        pass

    @abstractmethod
    def kinds(self, xs: np.ndarray, ts: np.ndarray) -> np.ndarray:
        """Arrow kinds (OutcomeKind values, int8) at even sites, shape of xs."""
        pass

    @abstractmethod
    def kill_marks(self, xs: np.ndarray, ts: np.ndarray) -> np.ndarray:
        """Layered-mode kill marks (bool); all False in joint mode."""
        pass

    @abstractmethod
    def latent_directions(self, xs: np.ndarray, ts: np.ndarray) -> np.ndarray:
        """Resampled direction (+1/-1, int8) used at joint-mode kill sites."""
        pass

    @abstractmethod
    def hop_uniforms(self, xs: np.ndarray, ts: np.ndarray) -> np.ndarray:
        """Per-site uniform variate driving uniform-hop tie breaking."""
        pass

    def outcome_at(self, site: LatticePoint) -> SiteOutcome:
        """Local outcome of the forward lattice at an even site."""
        check_parity(site.x, site.t, even=True)
        xs, ts = _as_sites(site.x, site.t)
        kind = OutcomeKind(int(self.kinds(xs, ts)[0]))
        mark = bool(self.kill_marks(xs, ts)[0])
        return SiteOutcome(kind=kind, kill_mark=mark)

    def dual_outcome_at(self, site: LatticePoint) -> SiteOutcome:
        """Dual outcome at an odd site: the forward outcome below it, rotated.

        Dual arrows point backward in time, so a dual LEFT_ONLY at (x, t) is
        the edge (x, t) -> (x - 1, t - 1).
        """
        check_parity(site.x, site.t, even=False)
        forward = self.outcome_at(LatticePoint(site.x, site.t - 1))
        return SiteOutcome(kind=ROTATION[forward.kind], kill_mark=forward.kill_mark)

    def killing_mask(self, xs, ts) -> np.ndarray:
        """True where a path dies: joint KILL sites and layered kill marks."""
        xs, ts = _as_sites(xs, ts)
        return (self.kinds(xs, ts) == OutcomeKind.KILL) | self.kill_marks(xs, ts)

    def net_kinds(self, xs, ts) -> np.ndarray:
        """Arrow kinds of the killing-free reference net.

        Raises:
            UndefinedArrowError: joint-mode kill site without latent arrows
        """
        xs, ts = _as_sites(xs, ts)
        kinds = self.kinds(xs, ts)
        killed = kinds == OutcomeKind.KILL
        if not killed.any():
            return kinds
        if not self.has_latent_arrows:
            idx = int(np.flatnonzero(killed)[0])
            raise UndefinedArrowError(
                f"kill site ({xs[idx]}, {ts[idx]}) carries no arrow; "
                "enable kill-site resampling for the reference net"
            )
        kinds = kinds.copy()
        latent = self.latent_directions(xs[killed], ts[killed])
        kinds[killed] = np.where(
            latent < 0, OutcomeKind.LEFT_ONLY, OutcomeKind.RIGHT_ONLY
        )
        return kinds

    def web_directions(self, xs, ts, web: Web) -> np.ndarray:
        """Direction (+1/-1) of the left or right web at even sites."""
        kinds = self.net_kinds(xs, ts)
        both_side = -1 if web == Web.LEFT else 1
        out = np.where(kinds == OutcomeKind.LEFT_ONLY, -1, 1).astype(np.int8)
        out[kinds == OutcomeKind.BOTH] = both_side
        return out

    def resolved_web_outcome(self, site: LatticePoint, web: Web) -> Direction:
        """Arrow followed by the left/right web at an even site."""
        check_parity(site.x, site.t, even=True)
        return Direction(int(self.web_directions(site.x, site.t, web)[0]))

    def dual_web_directions(self, xs, ts, web: Web) -> np.ndarray:
        """Backward step (+1/-1) of the dual web at odd sites (xs, ts).

        The dual arrow is the 180 degree rotation of the web-resolved forward
        arrow at (x, t - 1): forward left becomes a dual step to the right.
        """
        xs, ts = _as_sites(xs, ts)
        return -self.web_directions(xs, ts - 1, web)

    def hop_directions(self, xs, ts) -> np.ndarray:
        """Direction chosen by a uniform-hop walker (killing ignored)."""
        xs, ts = _as_sites(xs, ts)
        kinds = self.net_kinds(xs, ts)
        out = np.where(kinds == OutcomeKind.LEFT_ONLY, -1, 1).astype(np.int8)
        both = kinds == OutcomeKind.BOTH
        if both.any():
            coin = self.hop_uniforms(xs[both], ts[both])
            out[both] = np.where(coin < 0.5, -1, 1)
        return out

    def offspring(self, xs, ts, killing: bool) -> tuple[np.ndarray, np.ndarray]:
        """Masks of occupied sites sending a particle left and right.

        With killing on, kill sites and kill marks produce nothing. With
        killing off, layered marks are ignored and joint kill sites follow
        their latent arrow when one exists, otherwise they remain sinks.
        """
        xs, ts = _as_sites(xs, ts)
        kinds = self.kinds(xs, ts)
        if killing:
            dead = (kinds == OutcomeKind.KILL) | self.kill_marks(xs, ts)
        else:
            if self.has_latent_arrows:
                kinds = self.net_kinds(xs, ts)
            dead = kinds == OutcomeKind.KILL
        left = (kinds == OutcomeKind.BOTH) | (kinds == OutcomeKind.LEFT_ONLY)
        right = (kinds == OutcomeKind.BOTH) | (kinds == OutcomeKind.RIGHT_ONLY)
        return left & ~dead, right & ~dead
