"""
Coordinate sets of rank k-1 built from the repair sets of a code.

A set S with rank(S) = k-1 certifies d <= n - |S|, since the minimum distance
is n minus the size of the largest coordinate set of rank below k.
"""

import logging

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from django.core.exceptions import ValidationError
from django.db import models

from bounds.formulas import overlap_slack
from linearcode.codes import LinearCode
from locality.families import (
    RepairFamily,
    extract_essential_cover,
    find_overlap_subset,
    has_small_pairwise_overlaps,
    is_nearly_disjoint,
    nearly_disjoint_subfamily,
    padded_slack,
)
from locality.overlaps import OverlapBreak, break_heavy_overlaps, extend_redundant
from locality.params import LrcParams, ceil_div, decompose
from locality.repair import locality_cover
from utils.search import ensure

logger = logging.getLogger(__name__)


def find_low_rank_set(
    code: LinearCode,
    family: RepairFamily,
    seeds: Sequence[int],
    slack: int,
    r: int,
    delta: int,
    ground: Optional[Iterable[int]] = None,
    candidates: Optional[Sequence[int]] = None,
) -> frozenset[int]:
    """
    Builds a set of rank k-1 containing the union of a nearly disjoint
    subfamily of repair sets.

    Repair sets that strictly raise the rank are added, lowest position
    first, until there are ceil((k + slack)/r) - 1 of them; the union is then
    completed greedily with the coordinates of ``ground`` that keep the rank
    at most k-1.

    Parameters
    ----------
    code: LinearCode
        The code, whose dimension is the rank of ``ground``.
    family: RepairFamily
        Repair sets of ``code``.
    seeds: Sequence[int]
        The positions of a nearly disjoint subfamily with at most u blocks.
    slack: int
        A lower bound of the padded slack of the seeds, at least 0.
    r: int
        The locality.
    delta: int
        The local distance.
    ground: Optional[Iterable[int]]
        The coordinates the set is taken from, all of them by default.
    candidates: Optional[Sequence[int]]
        The positions of the repair sets that can be added, all by default.

    Returns
    -------
    frozenset[int]
        A set S with rank(S) = k-1 and |S| >= k-1 + (ceil((k+slack)/r) - 1)(delta-1).

    Raises
    ------
    ValidationError
        If the seeds aren't nearly disjoint, are more than u, or have a padded
        slack below ``slack``.
    """
    k = code.k
    u = (k - 1) // r
    seeds = sorted(seeds)
    ground = sorted(range(code.n) if ground is None else set(ground))
    candidates = list(range(len(family))) if candidates is None else sorted(candidates)
    if slack < 0:
        raise ValidationError(f"The slack must be nonnegative, got {slack}")
    if len(seeds) > u:
        raise ValidationError(f"At most u={u} seed blocks are allowed, got {len(seeds)}")
    if not is_nearly_disjoint(family.at(seeds), delta):
        raise ValidationError("The seed blocks aren't nearly disjoint")
    if padded_slack(family.at(seeds), r + delta - 1) < slack:
        raise ValidationError(f"The padded slack of the seed blocks is below {slack}")
    ensure(code.coord_rank(ground) == k, "The ground coordinates don't have full rank")

    def check_rank_deficit(chosen):
        covered = family.union(chosen)
        ensure(
            code.coord_rank(covered) <= len(covered) - len(chosen) * (delta - 1),
            "A chosen subfamily has rank above |union| - |V|(delta-1)",
        )

    chosen = list(seeds)
    check_rank_deficit(chosen)
    target = ceil_div(k + slack, r) - 1
    while len(chosen) < target:
        current = code.coord_rank(family.union(chosen))
        position = next(
            (
                i
                for i in candidates
                if i not in chosen and code.coord_rank(family.union(chosen + [i])) > current
            ),
            None,
        )
        ensure(position is not None, "No repair set raises the rank of a set below rank k")
        chosen.append(position)
        check_rank_deficit(chosen)
    logger.debug("Low rank set grown from the repair sets %s", [i + 1 for i in chosen])

    coordinates = set(family.union(chosen))
    ensure(code.coord_rank(coordinates) <= k - 1, "The chosen repair sets have rank k")
    for j in ground:
        if j not in coordinates and code.coord_rank(coordinates | {j}) <= k - 1:
            coordinates.add(j)
    ensure(code.coord_rank(coordinates) == k - 1, "The completed set doesn't have rank k-1")
    ensure(
        len(coordinates) >= k - 1 + target * (delta - 1),
        "The completed set is smaller than k-1 + (ceil((k+slack)/r) - 1)(delta-1)",
    )
    return frozenset(coordinates)


class WitnessCase(models.TextChoices):
    NEARLY_DISJOINT = "u>M:C1", "u > M, the chosen subfamily is nearly disjoint"
    SMALL_OVERLAPS = "u>M:C2", "u > M, the chosen subfamily only has small pairwise overlaps"
    EXCLUSIVE = "u<=M", "u <= M, the exclusive coordinates complete the set"


@dataclass(frozen=True)
class BoundWitness:
    """
    A coordinate set of rank k-1 and how it was obtained.
    """

    params: LrcParams
    cover: RepairFamily
    overlap_break: OverlapBreak
    coordinates: frozenset[int]
    case: WitnessCase
    lower_bound: int

    @property
    def exclusive_count(self) -> int:
        return self.overlap_break.exclusive_count

    @property
    def distance_bound(self) -> int:
        """
        The certified upper bound on the minimum distance, n - |S|.
        """
        return self.params.n - len(self.coordinates)


def bound_witness(
    code: LinearCode, r: int, delta: int, repair_sets: Optional[RepairFamily] = None
) -> BoundWitness:
    """
    Builds a set of rank k-1 as large as the improved bound guarantees.

    The repair sets (all of them unless given) are reduced to an essential
    cover, its heavy overlaps are broken and the redundant blocks removed;
    the exclusive count M then selects the construction.

    Raises
    ------
    ValidationError
        If a coordinate is in no repair set, or the parameters are infeasible.
    """
    params = decompose(code.n, code.k, r, delta)
    family = locality_cover(code, r, delta) if repair_sets is None else repair_sets
    cover = extract_essential_cover(family, params)
    broken = extend_redundant(code, break_heavy_overlaps(cover, delta))
    k, u, M = params.k, params.u, broken.exclusive_count
    exclusive = broken.exclusive
    remaining = cover.complement(broken.removed)
    reduced_ground = [i for i in range(code.n) if i not in exclusive]
    ensure(
        code.coord_rank(reduced_ground) == k,
        "Removing the exclusive coordinates lowers the rank",
    )
    logger.info("%s: essential cover of %d repair sets, M=%d, u=%d", code, len(cover), M, u)

    if u > M:
        ensure(code.n - M >= params.block_size, "n - M is below r+delta-1")
        ensure(len(remaining) > u - M, "Too few repair sets remain after the removal")
        slack = overlap_slack(r, delta, code.n - M, u - M)
        chosen = find_overlap_subset(cover, u - M, r, delta, candidates=remaining)
        extended = sorted(set(chosen) | set(broken.kept))
        ensure(len(extended) <= u, "More than u repair sets were chosen")
        if is_nearly_disjoint(cover.at(extended), delta):
            base = find_low_rank_set(
                code, cover, extended, slack, r, delta, reduced_ground, remaining
            )
            coordinates = base | exclusive
            case = WitnessCase.NEARLY_DISJOINT
            lower_bound = k - 1 + M + (ceil_div(k + slack, r) - 1) * (delta - 1)
        else:
            ensure(
                has_small_pairwise_overlaps(cover.at(extended), delta),
                "The chosen repair sets have a heavy overlap",
            )
            reduced = nearly_disjoint_subfamily(cover, extended, r, delta)
            slack = ceil_div(r, 2)
            coordinates = find_low_rank_set(code, cover, reduced, slack, r, delta)
            case = WitnessCase.SMALL_OVERLAPS
            lower_bound = k - 1 + (ceil_div(k + slack, r) - 1) * (delta - 1)
    else:
        chosen = broken.kept[:u]
        base = find_low_rank_set(code, cover, chosen, 0, r, delta, reduced_ground, remaining)
        spanned = cover.union(chosen)
        completion = {i for i in exclusive if code.span_contains(spanned, i)}
        ensure(len(completion) >= u, "Fewer than u exclusive coordinates are spanned")
        coordinates = base | completion
        case = WitnessCase.EXCLUSIVE
        lower_bound = k - 1 + u + (ceil_div(k, r) - 1) * (delta - 1)

    ensure(code.coord_rank(coordinates) == k - 1, "The witness set doesn't have rank k-1")
    ensure(len(coordinates) >= lower_bound, "The witness set is below its guaranteed size")
    logger.info(
        "%s: witness of size %d (%s), d <= %d",
        code,
        len(coordinates),
        case.value,
        code.n - len(coordinates),
    )
    return BoundWitness(params, cover, broken, frozenset(coordinates), case, lower_bound)
