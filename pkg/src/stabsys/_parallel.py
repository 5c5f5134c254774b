"""Tiny ordered process-pool map; serial when one worker is requested."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def worker_count(requested: int | None = None) -> int:
    """Number of workers: explicit request, else STABSYS_THREADS, else 1."""
    if requested is None:
        env = os.environ.get("STABSYS_THREADS")
        requested = int(env) if env else 1
    cap = os.cpu_count() or 1
    return max(1, min(requested, cap))


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int | None = None) -> list[R]:
    """Map ``fn`` over ``items``; results come back in input order."""
    items = list(items)
    n = worker_count(workers)
    if n == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
