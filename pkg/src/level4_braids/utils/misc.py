"""Miscellaneous utilities"""

from __future__ import annotations

__all__ = [
    "with_progress",
    "all_pairs",
    "pair",
    "Pair",
]

from collections.abc import Iterable
from itertools import combinations
from typing import Any, TypeVar

T = TypeVar("T")

Pair = tuple[int, int]


def with_progress(
    items: Iterable[T],
    *,
    progress: bool = False,
    total: int | None = None,
    **tqdm_kw: Any,
) -> Iterable[T]:
    """
    Wrap `items` in a tqdm bar on stderr when `progress` is set.

    Falls back to the bare iterable if tqdm is not importable.

    Args:
        items (Iterable): Items to iterate.
        progress (bool): Whether to show a progress bar. Defaults to False.
        total (int, optional): Length hint for the bar. Defaults to None.
        **tqdm_kw: Additional keyword arguments to pass to `tqdm`; e.g. `desc`.
    """
    if not progress:
        return items
    try:
        from tqdm.auto import tqdm
        return tqdm(items, total=total, **tqdm_kw)
    except ImportError:
        return items


def pair(i: int, j: int) -> Pair:
    """Unordered pair of distinct strand labels, stored sorted."""
    if i == j:
        raise ValueError(f"pair needs distinct labels, got ({i}, {j})")
    return (i, j) if i < j else (j, i)


def all_pairs(n: int) -> list[Pair]:
    """All pairs {i, j} of [n] in lexicographic order."""
    return list(combinations(range(1, n + 1), 2))
