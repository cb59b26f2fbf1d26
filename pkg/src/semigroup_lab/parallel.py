"""Optional thread parallelism for grid sweeps.

``SEMIGROUP_LAB_THREADS`` caps the pool size (0 or unset = auto, 1 =
serial). Results are always combined in ascending index order, so a
parallel sweep is bitwise identical to a serial one.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def thread_count() -> int:
    raw = os.environ.get("SEMIGROUP_LAB_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n <= 0:
        n = min(4, os.cpu_count() or 1)
    return n


def ordered_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Map ``fn`` over ``items``, preserving order.

    Uses a thread pool when the configured thread count exceeds one;
    numpy/LAPACK kernels release the GIL so sweeps over independent
    grid points do overlap.
    """
    seq: Sequence[T] = list(items)
    n = thread_count()
    if n <= 1 or len(seq) < 4:
        return [fn(x) for x in seq]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, seq))
