"""
(r, delta)-repair sets of a linear code.

A coordinate set S is a repair set when |S| <= r+delta-1 and the code
punctured on S has minimum distance at least delta, i.e. any delta-1 erasures
inside S can be recovered from the rest of S.
"""

import logging

from itertools import combinations
from typing import Iterable

from django.conf import settings
from django.core.exceptions import ValidationError

from linearcode.codes import DistanceAboveCap, DistanceMethod, LinearCode
from locality.families import RepairFamily
from utils.search import check_limit, total_combinations

logger = logging.getLogger(__name__)


def _checked(code: LinearCode, coordinates: Iterable[int]) -> list[int]:
    coordinates = sorted(set(coordinates))
    if not coordinates:
        raise ValidationError("A repair set can't be empty")
    if coordinates[0] < 0 or coordinates[-1] >= code.n:
        raise ValidationError(f"Coordinates must lie in [1, {code.n}]")
    return coordinates


def is_repair_set(code: LinearCode, coordinates: Iterable[int], r: int, delta: int) -> bool:
    """
    Whether ``coordinates`` is an (r, delta)-repair set of ``code``, through
    the minimum distance of the punctured code.
    """
    coordinates = _checked(code, coordinates)
    if len(coordinates) > r + delta - 1:
        return False
    punctured = code.puncture(coordinates)
    if punctured.k == 0:
        return True
    try:
        punctured.min_distance(DistanceMethod.COLUMNS, cap=delta - 1)
    except DistanceAboveCap:
        return True
    return False


def is_repair_set_by_rank(
    code: LinearCode, coordinates: Iterable[int], r: int, delta: int
) -> bool:
    """
    Whether ``coordinates`` is an (r, delta)-repair set of ``code``, through
    ranks: every subset L of S with |L| = |S| - (delta-1) has rank(L) = rank(S).
    """
    coordinates = _checked(code, coordinates)
    if len(coordinates) > r + delta - 1:
        return False
    full = code.coord_rank(coordinates)
    size = max(len(coordinates) - delta + 1, 0)
    return all(code.coord_rank(subset) == full for subset in combinations(coordinates, size))


def all_repair_sets(code: LinearCode, r: int, delta: int) -> RepairFamily:
    """
    Every (r, delta)-repair set of ``code``.

    Returns
    -------
    RepairFamily
        The repair sets in lexicographic order of their sorted coordinates.

    Raises
    ------
    SearchLimitExceeded
        If there are more than ``REPAIR_SET_ENUMERATION_LIMIT`` candidate sets.
    """
    largest = min(r + delta - 1, code.n)
    check_limit(
        "repair set enumeration",
        total_combinations(range(1, largest + 1), code.n),
        settings.REPAIR_SET_ENUMERATION_LIMIT,
    )
    found = [
        frozenset(subset)
        for size in range(1, largest + 1)
        for subset in combinations(range(code.n), size)
        if is_repair_set(code, subset, r, delta)
    ]
    logger.debug("Found %d (%d, %d)-repair sets in %s", len(found), r, delta, code)
    return RepairFamily(code.n, tuple(found)).canonical()


def locality_cover(code: LinearCode, r: int, delta: int) -> RepairFamily:
    """
    The repair sets of ``code``, checked to cover every coordinate.

    Raises
    ------
    ValidationError
        Naming the first coordinate no repair set covers.
    """
    family = all_repair_sets(code, r, delta)
    uncovered = family.uncovered()
    if uncovered:
        raise ValidationError(f"No repair set covers coordinate {uncovered[0] + 1}")
    return family
