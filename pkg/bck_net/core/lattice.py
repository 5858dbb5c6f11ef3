from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, ParityError

__all__: list[str] = [
    "LatticePoint",
    "Window",
    "LatticeBox",
    "check_parity",
    "parity_sites",
]


@dataclass(frozen=True, order=True)
class LatticePoint:
    """A space-time site (x, t) of Z^2.

    Forward sites satisfy (x + t) even, dual sites (x + t) odd.
    """

    x: int
    t: int

    def __str__(self) -> str:
        return f"({self.x}, {self.t})"


def check_parity(x, t, even: bool = True) -> None:
    """Raise ParityError unless every (x, t) lies on the requested sublattice.

    Args:
        x: Scalar or array of space coordinates
        t: Scalar or array of time coordinates (broadcast against x)
        even: True for the forward lattice, False for the dual lattice
    """
    parity = (np.asarray(x, dtype=np.int64) + np.asarray(t, dtype=np.int64)) % 2
    expected = 0 if even else 1
    if np.any(parity != expected):
        lattice = "even (forward)" if even else "odd (dual)"
        raise ParityError(f"site(s) not on the {lattice} lattice: x={x}, t={t}")


def parity_sites(lo: int, hi: int, t: int) -> np.ndarray:
    """All x in [lo, hi] with (x + t) even, ascending."""
    first = lo if (lo + t) % 2 == 0 else lo + 1
    return np.arange(first, hi + 1, 2, dtype=np.int64)


@dataclass(frozen=True)
class Window:
    """Finite spatial window of the infinite lattice.

    Measurements are reported on the core [x_lo, x_hi]; simulation runs on
    [x_lo - buffer, x_hi + buffer].
    """

    x_lo: int
    x_hi: int
    buffer: int = 0

    def __post_init__(self):
        if self.x_lo >= self.x_hi:
            raise ConfigurationError(
                f"window requires x_lo < x_hi, got [{self.x_lo}, {self.x_hi}]"
            )
        if self.buffer < 0:
            raise ConfigurationError(f"window buffer must be >= 0, got {self.buffer}")

    @property
    def sim_lo(self) -> int:
        return self.x_lo - self.buffer

    @property
    def sim_hi(self) -> int:
        return self.x_hi + self.buffer

    def core_sites(self, t: int) -> np.ndarray:
        """Parity-correct core sites at time t."""
        return parity_sites(self.x_lo, self.x_hi, t)


@dataclass(frozen=True)
class LatticeBox:
    """Rectangle [x_lo, x_hi] x [t_lo, t_hi] of lattice sites (inclusive)."""

    x_lo: int
    x_hi: int
    t_lo: int
    t_hi: int

    def __post_init__(self):
        if self.x_lo > self.x_hi or self.t_lo > self.t_hi:
            raise ConfigurationError(f"empty lattice box: {self}")

    def even_sites(self) -> tuple[np.ndarray, np.ndarray]:
        """Flattened (xs, ts) of every even site in the box, ordered by (t, x)."""
        xs_list = []
        ts_list = []
        for t in range(self.t_lo, self.t_hi + 1):
            xs = parity_sites(self.x_lo, self.x_hi, t)
            xs_list.append(xs)
            ts_list.append(np.full(len(xs), t, dtype=np.int64))
        if not xs_list:
            return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
        return np.concatenate(xs_list), np.concatenate(ts_list)

    @property
    def n_even_sites(self) -> int:
        return sum(
            len(parity_sites(self.x_lo, self.x_hi, t))
            for t in range(self.t_lo, self.t_hi + 1)
        )
