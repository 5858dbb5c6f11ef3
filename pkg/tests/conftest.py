import numpy as np
import pytest

from bck_net.core import Environment, FieldMode, OutcomeKind


class TableEnvironment(Environment):
    """Environment with hand-written outcomes; unlisted sites are RIGHT_ONLY."""

    def __init__(self, kinds=None, marks=(), latent=None, mode=FieldMode.LAYERED):
        self.table = dict(kinds or {})
        self.marks = set(marks)
        self.latent = latent
        self._mode = mode

    @property
    def mode(self):
        return self._mode

    @property
    def has_latent_arrows(self):
        return self.latent is not None

    def _lookup(self, xs, ts, table, default, dtype):
        xs = np.atleast_1d(np.asarray(xs, dtype=np.int64))
        ts = np.broadcast_to(np.asarray(ts, dtype=np.int64), xs.shape)
        return np.array(
            [
                table.get((int(x), int(t)), default)
                for x, t in zip(xs.ravel(), ts.ravel())
            ],
            dtype=dtype,
        ).reshape(xs.shape)

    def kinds(self, xs, ts):
        return self._lookup(xs, ts, self.table, OutcomeKind.RIGHT_ONLY, np.int8)

    def kill_marks(self, xs, ts):
        marks = {site: True for site in self.marks}
        return self._lookup(xs, ts, marks, False, bool)

    def latent_directions(self, xs, ts):
        return self._lookup(xs, ts, self.latent or {}, 1, np.int8)

    def hop_uniforms(self, xs, ts):
        return self._lookup(xs, ts, {}, 0.25, np.float64)


def within_or_retry(run, reps, target=None, n_se=3.0):
    """Run run(reps) and compare with target within n_se standard errors.

    On a miss the run is repeated once with doubled replicates.
    """
    estimate = run(reps)
    if estimate.within(n_se, target):
        return estimate
    estimate = run(2 * reps)
    assert estimate.within(n_se, target), f"{estimate} misses {target}"
    return estimate


def frequency_within(hits, p, n_se=3.0) -> bool:
    """Whether the frequency of boolean `hits` is within n_se s.e. of p."""
    n = hits.size
    se = np.sqrt(p * (1 - p) / n)
    return abs(hits.mean() - p) <= n_se * max(se, 1e-12)


@pytest.fixture
def table_environment():
    return TableEnvironment


@pytest.fixture
def regression_value(request):
    """Compare a measured value with the one pinned in the pytest cache.

    The first run on a checkout records the value; later runs must reproduce it
    within `rel`. Clearing the cache (`pytest --cache-clear`) re-pins.
    """

    def check(key: str, value, rel: float = 1e-9):
        cache_key = f"bck_net/regression/{key}"
        pinned = request.config.cache.get(cache_key, None)
        if pinned is None:
            request.config.cache.set(cache_key, value)
            return value
        assert value == pytest.approx(pinned, rel=rel), f"{key} moved from {pinned}"
        return pinned

    return check
