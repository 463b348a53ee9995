"""
Breaking heavy overlaps in an essential cover of repair sets.

``break_heavy_overlaps`` runs the two overlap-breaking loops: the first
marks every pair (S_i, S_j) where S_i shares at least |S_i| - delta + 1
coordinates with S_j, the second propagates the marks from the touched
blocks that are still unmarked. ``extend_redundant`` then grows the marked
blocks into a largest set of blocks whose removal keeps the rank of the
touched ones, and its exclusively covered coordinates give the exclusive
count used by the improved bound.
"""

import logging

from dataclasses import dataclass, replace
from typing import Iterator, Optional

from django.conf import settings
from django.core.exceptions import ValidationError

from linearcode.codes import LinearCode
from locality.families import RepairFamily, has_small_pairwise_overlaps, is_nearly_disjoint
from utils.search import check_limit, ensure

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OverlapBreak:
    """
    The outcome of breaking the heavy overlaps of ``family``.

    Attributes
    ----------
    family: RepairFamily
        The essential cover the blocks are positions of.
    delta: int
        The local distance the overlaps are measured with.
    touched: frozenset[int]
        The blocks met by the two loops.
    seeds: frozenset[int]
        The blocks marked as spanned by another touched block.
    redundant: Optional[frozenset[int]]
        The touched blocks removed without losing rank, a superset of
        ``seeds``; ``None`` until ``extend_redundant`` runs.
    """

    family: RepairFamily
    delta: int
    touched: frozenset[int]
    seeds: frozenset[int]
    redundant: Optional[frozenset[int]] = None

    @property
    def removed(self) -> frozenset[int]:
        return self.seeds if self.redundant is None else self.redundant

    @property
    def kept(self) -> list[int]:
        """
        The touched blocks that aren't removed, increasing.
        """
        return sorted(self.touched - self.removed)

    @property
    def exclusive(self) -> frozenset[int]:
        """
        The coordinates covered by the removed blocks and by no other block.
        """
        if not self.removed:
            return frozenset()
        return self.family.exclusive(*sorted(self.removed))

    @property
    def exclusive_count(self) -> int:
        return len(self.exclusive)

    def check_cardinality_bounds(self):
        """
        On an essential cover, each removed block owns a coordinate no other
        block covers and the loops mark one seed per newly touched block, so
        |removed| <= M, |touched \\ removed| <= M and |touched| <= 2M.
        """
        if not self.family.is_essential():
            return
        count = self.exclusive_count
        ensure(len(self.removed) <= count, "More removed blocks than exclusive coordinates")
        ensure(len(self.kept) <= count, "More kept touched blocks than exclusive coordinates")
        ensure(len(self.touched) <= 2 * count, "Touched blocks exceed twice the exclusive count")


def _heavy(family: RepairFamily, i: int, j: int, delta: int) -> bool:
    block = family.blocks[i]
    return len(block & family.blocks[j]) >= len(block) - delta + 1


def _first_moves(family, delta, touched):
    return (
        (i, j)
        for i in range(len(family))
        if i not in touched
        for j in range(len(family))
        if j != i and _heavy(family, i, j, delta)
    )


def _second_moves(family, delta, touched, seeds):
    return (
        (i, j)
        for i in sorted(touched - seeds)
        for j in range(len(family))
        if j not in touched and _heavy(family, i, j, delta)
    )


def break_heavy_overlaps(family: RepairFamily, delta: int) -> OverlapBreak:
    """
    Runs the two loops, always picking the smallest i and then the smallest j.

    Returns
    -------
    OverlapBreak
        ``touched`` and ``seeds``; the blocks outside ``touched`` have small
        pairwise overlaps.
    """
    touched, seeds = set(), set()
    while (move := next(_first_moves(family, delta, touched), None)) is not None:
        i, j = move
        touched |= {i, j}
        seeds.add(i)
    while (move := next(_second_moves(family, delta, touched, seeds), None)) is not None:
        i, j = move
        touched.add(j)
        seeds.add(i)
    ensure(
        has_small_pairwise_overlaps(family.at(family.complement(touched)), delta),
        "The untouched blocks still have a heavy overlap",
    )
    logger.debug("Touched blocks %s, seeds %s", sorted(touched), sorted(seeds))
    return OverlapBreak(family, delta, frozenset(touched), frozenset(seeds))


def extend_redundant(code: LinearCode, result: OverlapBreak) -> OverlapBreak:
    """
    Grows the seeds, in increasing position order, into a maximal set of
    touched blocks whose removal keeps rank(touched) unchanged.

    Raises
    ------
    ValidationError
        If the family isn't on the coordinates of ``code``.
    """
    family = result.family
    if family.n != code.n:
        raise ValidationError(f"The family is on {family.n} coordinates, the code has {code.n}")
    target = code.coord_rank(family.union(result.touched))
    redundant = set(result.seeds)
    ensure(
        code.coord_rank(family.union(result.touched - redundant)) == target,
        "Removing the seeds changes the rank of the touched blocks",
    )
    for position in sorted(result.touched - result.seeds):
        remaining = result.touched - redundant - {position}
        if code.coord_rank(family.union(remaining)) == target:
            redundant.add(position)
    extended = replace(result, redundant=frozenset(redundant))
    kept = extended.kept
    for position in kept:
        others = [i for i in kept if i != position]
        ensure(
            code.coord_rank(family.union(others)) < target,
            f"Block {position + 1} could still be removed",
        )
    ensure(
        is_nearly_disjoint(family.at(kept), result.delta),
        "The kept touched blocks aren't nearly disjoint",
    )
    ensure(
        has_small_pairwise_overlaps(family.at(family.complement(redundant)), result.delta),
        "The blocks left after removing the redundant ones have a heavy overlap",
    )
    extended.check_cardinality_bounds()
    logger.debug(
        "Redundant blocks %s, exclusive count %d", sorted(redundant), extended.exclusive_count
    )
    return extended


def _outcomes(family, delta, touched, seeds, first_loop, seen) -> Iterator[tuple]:
    state = (touched, seeds, first_loop)
    if state in seen:
        return
    seen.add(state)
    if first_loop:
        moves = list(_first_moves(family, delta, touched))
        if not moves:
            yield from _outcomes(family, delta, touched, seeds, False, seen)
        for i, j in moves:
            yield from _outcomes(family, delta, touched | {i, j}, seeds | {i}, True, seen)
        return
    moves = list(_second_moves(family, delta, touched, seeds))
    if not moves:
        yield touched, seeds
    for i, j in moves:
        yield from _outcomes(family, delta, touched | {j}, seeds | {i}, False, seen)


def enumerate_break_outcomes(family: RepairFamily, delta: int) -> list[OverlapBreak]:
    """
    Every distinct outcome of the two loops over all the admissible choices
    of (S_i, S_j) at each step, ordered by touched and then seed positions.

    Raises
    ------
    SearchLimitExceeded
        If the family has more than ``BREAK_ORDER_MAX_FAMILY`` blocks.
    """
    check_limit("overlap-breaking orders", len(family), settings.BREAK_ORDER_MAX_FAMILY)
    found = set(_outcomes(family, delta, frozenset(), frozenset(), True, set()))
    outcomes = [
        OverlapBreak(family, delta, touched, seeds)
        for touched, seeds in sorted(found, key=lambda pair: (sorted(pair[0]), sorted(pair[1])))
    ]
    logger.debug("%d distinct overlap-breaking outcomes", len(outcomes))
    return outcomes


def exclusive_count_landscape(
    code: LinearCode, family: RepairFamily, delta: int
) -> list[OverlapBreak]:
    """
    ``extend_redundant`` applied to every outcome of
    ``enumerate_break_outcomes``: the exclusive counts the improved bound can
    be evaluated with.
    """
    return [extend_redundant(code, outcome) for outcome in enumerate_break_outcomes(family, delta)]
