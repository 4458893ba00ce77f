"""Process-pool plumbing shared by enumeration-heavy callers.

Work items are pure functions of picklable arguments, so any partitioning
of a job yields the same merged result; callers rely on that when they
split enumerations by word prefix or fan a parameter grid across workers.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

A = TypeVar("A")
B = TypeVar("B")

_ENV_VAR = "CANONLAB_WORKERS"


def worker_count(requested: int | None = None) -> int:
    """Resolve a worker count: explicit argument, CANONLAB_WORKERS, or all
    available cores."""
    if requested is not None:
        if requested < 1:
            raise ValueError("worker count must be at least 1")
        return requested
    env = os.environ.get(_ENV_VAR)
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"{_ENV_VAR} must be an integer, got {env!r}") from None
        if value < 1:
            raise ValueError(f"{_ENV_VAR} must be at least 1, got {value}")
        return value
    return os.cpu_count() or 1


def parallel_map(fn: Callable[[A], B], items: Iterable[A], workers: int) -> list[B]:
    """Map fn over items, in order, across up to `workers` processes.

    Falls back to a plain loop when one worker (or one item) makes a pool
    pointless.
    """
    todo: Sequence[A] = list(items)
    if workers <= 1 or len(todo) <= 1:
        return [fn(x) for x in todo]
    with ProcessPoolExecutor(max_workers=min(workers, len(todo))) as pool:
        return list(pool.map(fn, todo))
