import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

import numpy as np

from pruneclust.config import settings
from pruneclust.errors import DomainError

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def worker_count(threads: Optional[int] = None) -> int:
    """Explicit count, else PRUNECLUST_THREADS, where 0 means every core."""
    threads = settings.THREADS if threads is None else threads
    if threads < 0:
        raise DomainError(f"thread count must be >= 0, got {threads}")
    return threads or (os.cpu_count() or 1)


def sub_seed(seed: int, index: int) -> int:
    """Replicate seed derived from (master seed, replicate index); schedule independent."""
    return int(np.random.SeedSequence([seed, index]).generate_state(1, dtype=np.uint64)[0])


def run_ordered(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """Map `func` over `items`, results in input order whatever the pool size."""
    items = list(items)
    workers = min(worker_count(threads), len(items)) if items else 1
    if workers <= 1:
        return [func(item) for item in items]
    logger.debug("running %d jobs on %d workers", len(items), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
