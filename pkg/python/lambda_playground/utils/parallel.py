"""
Sharding of per-size work across ray workers.
"""

import logging
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger(__name__)

R = TypeVar("R")


def _apply(fn: Callable[[int], R], size: int) -> R:
    return fn(size)


def map_sizes(fn: Callable[[int], R], sizes: Sequence[int], jobs: int = 1) -> List[R]:
    """
    Apply fn to every size, in order.

    With jobs > 1 each size runs as a ray task on a local cluster of that
    many CPUs; results come back in the order of sizes.

    Args:
        fn: Picklable function of one size (functools.partial is fine)
        sizes: Sizes to process
        jobs: Number of workers

    Returns:
        [fn(s) for s in sizes]
    """
    sizes = list(sizes)
    if jobs <= 1 or len(sizes) <= 1:
        return [fn(s) for s in sizes]

    import ray

    logger.info(f"Sharding {len(sizes)} sizes over {jobs} ray workers")
    started = not ray.is_initialized()
    if started:
        ray.init(num_cpus=jobs, include_dashboard=False, log_to_driver=False)
    try:
        task = ray.remote(_apply)
        return ray.get([task.remote(fn, s) for s in sizes])
    finally:
        if started:
            ray.shutdown()
