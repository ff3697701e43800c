"""Shared worker-pool helper behind the --threads flag."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
U = TypeVar("U")

THREADS_ENV = "TROPIBOUND_THREADS"


def resolve_threads(explicit: int | None = None) -> int:
    """Explicit flag wins, then the environment, then 1."""
    if explicit is not None:
        if explicit < 1:
            raise ValueError("thread count must be at least 1")
        return explicit
    env = os.environ.get(THREADS_ENV)
    if env:
        value = int(env)
        if value < 1:
            raise ValueError(f"{THREADS_ENV} must be at least 1")
        return value
    return 1


def parallel_map(fn: Callable[[T], U], items: Sequence[T], threads: int = 1) -> list[U]:
    """Order-preserving map, threaded when asked.

    Callers pass pure functions only, so results are identical for any
    thread count; the merge order is the input order.
    """
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
