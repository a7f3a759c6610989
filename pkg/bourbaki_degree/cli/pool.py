"""Bounded worker pool that hands results back in input order."""

from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from bourbaki_degree.core.config import get_settings

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Iterable[T], threads: int | None = None) -> list[R]:
    """``[fn(x) for x in items]`` on up to ``threads`` workers; the first exception propagates."""
    items = list(items)
    workers = max(1, min(threads or get_settings().threads, len(items) or 1))
    if workers == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="bourbaki") as pool:
        return list(pool.map(fn, items))
