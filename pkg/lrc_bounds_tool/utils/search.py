"""
Guarded enumeration helpers for the exhaustive searches.
"""

import logging

from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence, TypeVar

from utils.exceptions import InvariantViolation, SearchLimitExceeded

logger = logging.getLogger(__name__)

T = TypeVar("T")


def ensure(condition: bool, message: str):
    """
    Checks an internal invariant, raising ``InvariantViolation`` when it fails.

    Unlike ``assert`` it isn't stripped under ``python -O``.
    """
    if not condition:
        raise InvariantViolation(message)


def check_limit(guard: str, requested: int, limit: int):
    """
    Raises ``SearchLimitExceeded`` if ``requested`` goes past ``limit``.
    """
    if requested > limit:
        raise SearchLimitExceeded(guard, requested, limit)


def guarded_combinations(
    items: Sequence[T], size: int, limit: int, guard: str
) -> Iterator[tuple[T, ...]]:
    """
    Iterates over the ``size``-subsets of ``items`` in lexicographic order.

    Parameters
    ----------
    items: Sequence[T]
        The items to choose from.
    size: int
        The size of the subsets.
    limit: int
        The largest number of subsets allowed.
    guard: str
        The name of the guard, reported when the limit is exceeded.

    Returns
    -------
    Iterator[tuple[T, ...]]
        The subsets, as tuples following the order of ``items``.
    """
    total = comb(len(items), size)
    check_limit(guard, total, limit)
    logger.debug("%s: scanning %d subsets of size %d", guard, total, size)
    return combinations(items, size)


def total_combinations(sizes: Iterable[int], universe: int) -> int:
    """
    Number of subsets of a ``universe``-set whose size is in ``sizes``.
    """
    return sum(comb(universe, size) for size in sizes)
