import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from bck_net.core import ConfigurationError

__all__: list[str] = ["ReplicateRunner", "default_runner"]

logger = logging.getLogger(__name__)

T = TypeVar("T")


class ReplicateRunner:
    """Fans independent replicates out over a thread pool.

    Results always come back in replicate-index order, so every reduction
    is identical for any number of threads.
    """

    def __init__(self, threads: int = 1):
        if threads < 1:
            raise ConfigurationError(f"threads must be >= 1, got {threads}")
        self.threads = threads

    def map(self, fn: Callable[[int], T], reps: int) -> list[T]:
        """Evaluate fn(r) for r = 0..reps-1."""
        if reps < 1:
            raise ConfigurationError(f"reps must be >= 1, got {reps}")
        if self.threads == 1 or reps == 1:
            return [fn(r) for r in range(reps)]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(fn, range(reps)))

    def __repr__(self) -> str:
        return f"ReplicateRunner(threads={self.threads})"


def default_runner(runner: "ReplicateRunner | None") -> "ReplicateRunner":
    return runner if runner is not None else ReplicateRunner()
