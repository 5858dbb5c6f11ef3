import numpy as np

from .constants import GOLDEN_GAMMA, MIX_MULT_1, MIX_MULT_2, N_STREAMS

__all__: list[str] = ["VariatesMixin", "mix64", "derive_seed"]

_GOLDEN = np.uint64(GOLDEN_GAMMA)
_M1 = np.uint64(MIX_MULT_1)
_M2 = np.uint64(MIX_MULT_2)
_S11 = np.uint64(11)
_S27 = np.uint64(27)
_S30 = np.uint64(30)
_S31 = np.uint64(31)
_UNIT = 2.0**-53


def mix64(z: np.ndarray) -> np.ndarray:
    """splitmix64 finaliser applied elementwise to a uint64 array."""
    z = np.atleast_1d(z).astype(np.uint64, copy=True)
    z ^= z >> _S30
    z *= _M1
    z ^= z >> _S27
    z *= _M2
    z ^= z >> _S31
    return z


def derive_seed(seed: int, index: int) -> int:
    """Child seed for replicate or label `index` of an environment seed."""
    base = mix64(np.array([seed], dtype=np.uint64))
    offset = np.array([index + 1], dtype=np.uint64) * _GOLDEN
    child = mix64(base ^ offset)
    return int(child[0])


def _as_uint64(values) -> np.ndarray:
    return np.ascontiguousarray(values, dtype=np.int64).view(np.uint64)


class VariatesMixin:
    """Counter-based per-site variates.

    Every variate is a stateless hash of (seed, stream, x, t), so any site can
    be queried in any order, by any number of readers, with identical results.
    """

    def __init__(self, seed: int) -> None:
        self._seed = int(seed)
        seeded = mix64(np.array([self._seed], dtype=np.uint64))
        offsets = np.arange(1, N_STREAMS + 1, dtype=np.uint64) * _GOLDEN
        keys = mix64(seeded + offsets)
        keys.flags.writeable = False
        self._stream_keys = keys

    def _stream_key(self, stream: int) -> np.uint64:
        return self._stream_keys[stream]

    def uniforms(self, xs, ts, stream: int) -> np.ndarray:
        """Uniform variates in [0, 1) for the sites (xs, ts) on a stream."""
        xs = np.atleast_1d(np.asarray(xs, dtype=np.int64))
        ts = np.broadcast_to(np.asarray(ts, dtype=np.int64), xs.shape)
        h = mix64(_as_uint64(xs) ^ self._stream_key(stream))
        h = mix64(h + _as_uint64(ts) * _GOLDEN)
        return (h >> _S11).astype(np.float64) * _UNIT
