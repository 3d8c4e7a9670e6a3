import logging
import os
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, TypeVar

from betti_bounds.config import BettiConfig

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

# Chunks per worker; keeps the pickling overhead per item low.
CHUNKS_PER_WORKER = 4


class SurveyRunner:
    """
    Fans independent survey items out to a pool of worker processes.

    Survey checks are pure-Python rational arithmetic, so they run in separate
    processes rather than threads. The mapped function must be picklable: a
    module-level function, or a functools.partial of one. Results come back in
    the order of the input items, so the merged output does not depend on the
    worker count.
    """

    def __init__(self, workers: Optional[int] = None):
        """
        Initialize the runner.

        Args:
            workers: Worker process count; None means one per CPU.
        """
        self.workers = workers or os.cpu_count() or 1

    @classmethod
    def from_config(cls, config: BettiConfig) -> "SurveyRunner":
        return cls(workers=config.threads)

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        items = list(items)
        if self.workers == 1 or len(items) < 2:
            return [fn(item) for item in items]
        chunksize = max(1, len(items) // (self.workers * CHUNKS_PER_WORKER))
        logger.debug(
            "Fanning out %d items to %d workers (chunksize %d)",
            len(items),
            self.workers,
            chunksize,
        )
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            return list(pool.map(fn, items, chunksize=chunksize))
