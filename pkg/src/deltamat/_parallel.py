"""Optional thread-parallel map whose result is independent of scheduling."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def map_ordered(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """Apply fn over items, optionally on a thread pool, merging in input order."""
    seq: Sequence[T] = list(items)
    if workers <= 1 or len(seq) <= 1:
        return [fn(x) for x in seq]
    size = max(1, (len(seq) + workers - 1) // workers)
    chunks = [seq[i : i + size] for i in range(0, len(seq), size)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda chunk: [fn(x) for x in chunk], chunks))
    return [y for part in parts for y in part]
