import logging

import numpy as np

from bck_net.core import ConfigurationError, Environment, FieldMode, LatticeBox, Web

__all__: list[str] = ["StoredLattice"]

logger = logging.getLogger(__name__)


class StoredLattice(Environment):
    """Explicitly materialised environment on a finite box.

    Built from any Environment by reading every even site of the box once.
    Used as an independent oracle: it answers the same queries from stored
    arrays instead of hashing, and queries outside the box are rejected.
    """

    def __init__(
        self,
        source: Environment,
        box: LatticeBox,
        corrupt_rotation: bool = False,
    ):
        """
        Args:
            source: Environment whose outcomes are copied
            box: Region to materialise (inclusive bounds)
            corrupt_rotation: Serve unrotated dual arrows; only for checking
                that the oracle detects a broken duality
        """
        self.box = box
        self.corrupt_rotation = corrupt_rotation
        self._mode = source.mode
        self._has_latent = source.has_latent_arrows

        nx = box.x_hi - box.x_lo + 1
        nt = box.t_hi - box.t_lo + 1
        self._kinds = np.full((nt, nx), -1, dtype=np.int8)
        self._marks = np.zeros((nt, nx), dtype=bool)
        self._latent = np.zeros((nt, nx), dtype=np.int8)
        self._hop = np.zeros((nt, nx), dtype=np.float64)

        xs, ts = box.even_sites()
        if len(xs):
            rows = ts - box.t_lo
            cols = xs - box.x_lo
            self._kinds[rows, cols] = source.kinds(xs, ts)
            self._marks[rows, cols] = source.kill_marks(xs, ts)
            self._hop[rows, cols] = source.hop_uniforms(xs, ts)
            if self._has_latent:
                self._latent[rows, cols] = source.latent_directions(xs, ts)
        logger.debug(f"StoredLattice materialised {len(xs)} sites on {box}")

    @property
    def mode(self) -> FieldMode:
        return self._mode

    @property
    def has_latent_arrows(self) -> bool:
        return self._has_latent

    def _index(self, xs, ts) -> tuple[np.ndarray, np.ndarray]:
        xs = np.atleast_1d(np.asarray(xs, dtype=np.int64))
        ts = np.broadcast_to(np.asarray(ts, dtype=np.int64), xs.shape)
        box = self.box
        outside = (xs < box.x_lo) | (xs > box.x_hi) | (ts < box.t_lo) | (ts > box.t_hi)
        if outside.any():
            idx = int(np.flatnonzero(outside)[0])
            raise ConfigurationError(
                f"site ({xs.flat[idx]}, {ts.flat[idx]}) "
                f"lies outside the stored box {box}"
            )
        return ts - box.t_lo, xs - box.x_lo

    def kinds(self, xs, ts) -> np.ndarray:
        return self._kinds[self._index(xs, ts)]

    def kill_marks(self, xs, ts) -> np.ndarray:
        return self._marks[self._index(xs, ts)]

    def latent_directions(self, xs, ts) -> np.ndarray:
        return self._latent[self._index(xs, ts)]

    def hop_uniforms(self, xs, ts) -> np.ndarray:
        return self._hop[self._index(xs, ts)]

    def dual_web_directions(self, xs, ts, web: Web) -> np.ndarray:
        directions = super().dual_web_directions(xs, ts, web)
        if self.corrupt_rotation:
            return -directions
        return directions
