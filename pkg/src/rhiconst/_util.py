"""Small shared helpers with no numerical content."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

_T = TypeVar("_T")
_R = TypeVar("_R")

__all__ = ["ordered_parallel_map", "worker_count"]


def worker_count() -> int:
    """Thread cap for embarrassingly parallel sweeps.

    RHI_THREADS overrides the CPU count; anything unparseable or < 1
    falls back to 1.
    """
    raw = os.environ.get("RHI_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = os.cpu_count() or 1
    return max(1, n)


def ordered_parallel_map(fn: Callable[[_T], _R], items: Sequence[_T]) -> list[_R]:
    """map() preserving input order, threaded when it can help.

    Workloads here are numpy-heavy, so threads overlap usefully despite
    the interpreter lock.  A single worker degrades to a plain loop to
    keep tracebacks simple.
    """
    n = worker_count()
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(n, len(items))) as pool:
        return list(pool.map(fn, items))
