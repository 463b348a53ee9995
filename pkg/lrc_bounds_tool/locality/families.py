"""
Families of coordinate sets: essential covers, overlap, the three structural
conditions on repair-set subfamilies and the searches for subfamilies with a
large padded slack.

A subfamily is given by the positions of its blocks in the family.
"""

import logging

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

from django.conf import settings
from django.core.exceptions import ValidationError

from bounds.formulas import overlap_slack
from locality.params import LrcParams, ceil_div
from utils.identifiers import AbstractIdentifier
from utils.search import ensure, guarded_combinations

logger = logging.getLogger(__name__)

Block = frozenset[int]


def union(blocks: Iterable[Block]) -> Block:
    return frozenset().union(*blocks)


def overlap(blocks: Sequence[Block]) -> int:
    """
    Total size of the blocks minus the size of their union. It is 0 iff the
    blocks are pairwise disjoint.
    """
    return sum(len(block) for block in blocks) - len(union(blocks))


def padded_slack(blocks: Sequence[Block], block_size: int) -> int:
    """
    |V|(r+delta-1) - |union of V|, the overlap the blocks would have if each
    one were padded to ``block_size`` coordinates inside the union.
    """
    return len(blocks) * block_size - len(union(blocks))


def is_nearly_disjoint(blocks: Sequence[Block], delta: int) -> bool:
    """
    Whether every block meets the union of the others in fewer than
    |S| - delta + 1 coordinates.
    """
    for i, block in enumerate(blocks):
        others = union(blocks[:i] + blocks[i + 1 :])
        if len(block & others) >= len(block) - delta + 1:
            return False
    return True


def has_small_pairwise_overlaps(blocks: Sequence[Block], delta: int) -> bool:
    """
    Whether any two distinct blocks share fewer than min(|S_i|, |S_j|) - delta + 1
    coordinates.
    """
    return all(
        len(a & b) < min(len(a), len(b)) - delta + 1 for a, b in combinations(blocks, 2)
    )


def has_heavy_overlap(blocks: Sequence[Block], delta: int) -> bool:
    """
    Whether two distinct blocks share at least min(|S_i|, |S_j|) - delta + 1
    coordinates; the negation of ``has_small_pairwise_overlaps``.
    """
    return not has_small_pairwise_overlaps(blocks, delta)


@dataclass(frozen=True)
class RepairFamily(AbstractIdentifier):
    """
    An ordered family of nonempty subsets of the coordinates {0, ..., n-1}.
    """

    n: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(frozenset(block) for block in self.blocks))
        self.full_clean()

    def clean(self):
        if self.n < 1:
            raise ValidationError(f"The ground set must be nonempty, got n={self.n}")
        for position, block in enumerate(self.blocks):
            if not block:
                raise ValidationError(f"Block {position + 1} is empty")
            if min(block) < 0 or max(block) >= self.n:
                raise ValidationError(
                    f"Block {position + 1} has coordinates outside [1, {self.n}]"
                )

    def build_identifier(self) -> str:
        return f"{self.n}|{[sorted(block) for block in self.blocks]}"

    def __len__(self):
        return len(self.blocks)

    def __repr__(self):
        blocks = ", ".join("{" + ",".join(str(i + 1) for i in sorted(b)) + "}" for b in self.blocks)
        return f"RepairFamily(n={self.n}, [{blocks}])"

    def at(self, indices: Iterable[int]) -> list[Block]:
        """
        The blocks at the given positions, in the order given.
        """
        return [self.blocks[i] for i in indices]

    def union(self, indices: Optional[Iterable[int]] = None) -> Block:
        if indices is None:
            return union(self.blocks)
        return union(self.at(indices))

    def complement(self, indices: Iterable[int]) -> list[int]:
        """
        The positions that are not in ``indices``, in increasing order.
        """
        excluded = set(indices)
        return [i for i in range(len(self)) if i not in excluded]

    def uncovered(self) -> list[int]:
        """
        The coordinates no block covers, in increasing order.
        """
        covered = self.union()
        return [i for i in range(self.n) if i not in covered]

    def is_cover(self) -> bool:
        return not self.uncovered()

    def is_essential(self) -> bool:
        """
        Whether the family covers the ground set and no block can be removed
        without losing the cover.
        """
        if not self.is_cover():
            return False
        return all(self.exclusive(i) for i in range(len(self)))

    def is_essential_cover(self, block_size: int) -> bool:
        """
        The essential covering family flag: a cover by blocks of at most
        ``block_size`` coordinates with no redundant block.
        """
        return all(len(block) <= block_size for block in self.blocks) and self.is_essential()

    def exclusive(self, *indices: int) -> Block:
        """
        The coordinates covered by the blocks at ``indices`` and by no other
        block.
        """
        inside = self.union(indices)
        return inside - self.union(self.complement(indices))

    def conditions(self, delta: int, indices: Optional[Iterable[int]] = None) -> dict[str, bool]:
        """
        The flags of the three structural conditions for the subfamily at
        ``indices`` (the whole family by default).
        """
        blocks = self.at(indices) if indices is not None else list(self.blocks)
        return {
            "nearly_disjoint": is_nearly_disjoint(blocks, delta),
            "small_pairwise_overlaps": has_small_pairwise_overlaps(blocks, delta),
            "heavy_overlap": has_heavy_overlap(blocks, delta),
        }

    def subfamily(self, indices: Iterable[int]) -> "RepairFamily":
        return RepairFamily(self.n, tuple(self.at(indices)))

    def canonical(self) -> "RepairFamily":
        """
        The same blocks without duplicates, in lexicographic order of their
        sorted coordinates.
        """
        unique = {tuple(sorted(block)) for block in self.blocks}
        return RepairFamily(self.n, tuple(frozenset(block) for block in sorted(unique)))


def extract_essential_cover(
    family: RepairFamily, params: Optional[LrcParams] = None
) -> RepairFamily:
    """
    Extracts an essential cover: blocks are scanned from the last to the
    first and dropped whenever the remaining ones still cover the ground set.

    Parameters
    ----------
    family: RepairFamily
        A family covering {0, ..., n-1}.
    params: Optional[LrcParams]
        When the blocks are the repair sets of a code with these parameters,
        the size of the result is checked against ceil(n/(r+delta-1)) and
        ceil(k/r).

    Returns
    -------
    RepairFamily
        The essential subfamily, in the original order.

    Raises
    ------
    ValidationError
        If the family doesn't cover the ground set.
    """
    uncovered = family.uncovered()
    if uncovered:
        raise ValidationError(f"No block covers coordinate {uncovered[0] + 1}")
    kept = list(range(len(family)))
    for position in reversed(range(len(family))):
        remaining = [i for i in kept if i != position]
        if len(family.union(remaining)) == family.n:
            kept = remaining
    essential = family.subfamily(kept)
    logger.debug("Kept %d of %d blocks in the essential cover", len(essential), len(family))
    ensure(essential.is_essential(), "The extracted cover has a redundant block")
    if params is not None:
        ensure(
            len(essential) >= ceil_div(params.n, params.block_size),
            "An essential cover of repair sets needs at least ceil(n/(r+delta-1)) blocks",
        )
        ensure(
            len(essential) >= ceil_div(params.k, params.r),
            "An essential cover of repair sets needs at least ceil(k/r) blocks",
        )
    return essential


def _padded_blocks(family: RepairFamily, indices: Sequence[int], block_size: int) -> list[Block]:
    """
    Each block at ``indices`` completed to ``block_size`` coordinates with the
    smallest coordinates of the union of the subfamily it lacks.
    """
    ground = sorted(family.union(indices))
    padded = []
    for block in family.at(indices):
        missing = block_size - len(block)
        extra = [i for i in ground if i not in block][: max(missing, 0)]
        padded.append(block | frozenset(extra))
    return padded


def _pairing_subset(blocks: Sequence[Block], t: int) -> tuple[int, ...]:
    """
    A t-subset with overlap at least min(D(blocks), floor(t/2)).

    Blocks are taken one at a time while some block meets the current union,
    otherwise two at a time when two remaining blocks meet each other; each
    step raises the overlap by at least one for at most two blocks.
    """
    chosen: list[int] = []
    covered: set[int] = set()
    remaining = list(range(len(blocks)))
    while len(chosen) < t:
        single = next((i for i in remaining if blocks[i] & covered), None)
        if single is not None:
            step = [single]
        else:
            pair = next(
                ((i, j) for i, j in combinations(remaining, 2) if blocks[i] & blocks[j]),
                None,
            )
            step = list(pair) if pair is not None else [remaining[0]]
        step = step[: t - len(chosen)]
        for i in step:
            chosen.append(i)
            covered |= blocks[i]
            remaining.remove(i)
    return tuple(sorted(chosen))


def find_overlap_subset(
    family: RepairFamily,
    t: int,
    r: int,
    delta: int,
    candidates: Optional[Sequence[int]] = None,
) -> tuple[int, ...]:
    """
    Finds a t-subfamily V with |V|(r+delta-1) - |union of V| >= Phi(a, t),
    a being the size of the union of the candidate blocks.

    Parameters
    ----------
    family: RepairFamily
        The family the blocks come from.
    t: int
        The size of the subfamily, 0 <= t <= number of candidates.
    r: int
        The locality.
    delta: int
        The local distance; blocks have at most r+delta-1 coordinates.
    candidates: Optional[Sequence[int]]
        The positions the subfamily is chosen from, the whole family by
        default.

    Returns
    -------
    tuple[int, ...]
        The positions of the subfamily, increasing.

    Notes
    -----
    When there are at most ``OVERLAP_EXHAUSTIVE_LIMIT`` t-subsets, the one
    with the largest slack is returned, ties broken lexicographically.
    Otherwise the blocks are padded to r+delta-1 coordinates and the best of
    a pairing construction and a scan over the t-subsets of the first w+1
    padded blocks is returned.
    """
    candidates = list(range(len(family))) if candidates is None else sorted(candidates)
    block_size = r + delta - 1
    if not 0 <= t <= len(candidates):
        raise ValidationError(f"t must lie in [0, {len(candidates)}], got {t}")
    ground_size = len(family.union(candidates))
    target = overlap_slack(r, delta, ground_size, t) if t else 0
    if t == 0:
        return ()

    def slack(indices):
        return padded_slack(family.at(indices), block_size)

    if comb(len(candidates), t) <= settings.OVERLAP_EXHAUSTIVE_LIMIT:
        logger.debug("Exhaustive search over the %d-subsets of %d blocks", t, len(candidates))
        best = max(combinations(candidates, t), key=slack)
        ensure(slack(best) >= target, f"No {t}-subfamily reaches the slack {target}")
        return best

    logger.warning(
        "%d %d-subsets exceed the exhaustive limit, using the averaging search",
        comb(len(candidates), t),
        t,
    )
    padded = _padded_blocks(family, candidates, block_size)
    options = [tuple(candidates[i] for i in _pairing_subset(padded, t))]
    w = ground_size // block_size
    if t >= w + 1:
        options.append(tuple(candidates[:t]))
    elif len(candidates) > w and comb(w + 1, t) <= settings.OVERLAP_EXHAUSTIVE_LIMIT:
        fixed = list(range(w + 1))
        scan = max(
            combinations(fixed, t), key=lambda subset: overlap([padded[i] for i in subset])
        )
        options.append(tuple(candidates[i] for i in scan))
    best = max(options, key=slack)
    ensure(slack(best) >= target, f"No {t}-subfamily reaches the slack {target}")
    return best


def nearly_disjoint_subfamily(
    family: RepairFamily, indices: Sequence[int], r: int, delta: int
) -> tuple[int, ...]:
    """
    From a subfamily with small pairwise overlaps that isn't nearly disjoint,
    builds a nearly disjoint subfamily with padded slack at least ceil(r/2).

    For each block the smallest subfamily containing it in which it is
    heavily covered by the others is searched; of the smallest one found,
    V_tau around S_tau, the first other block S_t is taken and the result is
    {S_t, S_tau} when they share at least (|S_tau| - delta + 1)/2 coordinates,
    V_tau without S_t otherwise.

    Raises
    ------
    ValidationError
        If the subfamily has a heavy overlap or is already nearly disjoint.
    """
    indices = sorted(indices)
    blocks = family.at(indices)
    if not has_small_pairwise_overlaps(blocks, delta):
        raise ValidationError("The subfamily has two heavily overlapping blocks")
    if is_nearly_disjoint(blocks, delta):
        raise ValidationError("The subfamily is already nearly disjoint")

    def heavily_covered(position, others):
        block = family.blocks[position]
        return len(block & family.union(others)) >= len(block) - delta + 1

    smallest: Optional[tuple[int, tuple[int, ...]]] = None
    for position in indices:
        others = [i for i in indices if i != position]
        if not heavily_covered(position, others):
            continue
        limit = len(others) if smallest is None else len(smallest[1]) - 2
        for size in range(2, limit + 1):
            found = next(
                (
                    subset
                    for subset in guarded_combinations(
                        others, size, settings.OVERLAP_EXHAUSTIVE_LIMIT, "covering subfamily"
                    )
                    if heavily_covered(position, subset)
                ),
                None,
            )
            if found is not None:
                smallest = (position, tuple(sorted((position,) + found)))
                break
    ensure(smallest is not None, "A block of a non nearly disjoint family is heavily covered")
    tau, around = smallest
    s_t = next(i for i in around if i != tau)
    shared = len(family.blocks[tau] & family.blocks[s_t])
    if 2 * shared >= len(family.blocks[tau]) - delta + 1:
        result = tuple(sorted((s_t, tau)))
    else:
        result = tuple(i for i in around if i != s_t)
    ensure(
        is_nearly_disjoint(family.at(result), delta),
        "The reduced subfamily isn't nearly disjoint",
    )
    ensure(
        padded_slack(family.at(result), r + delta - 1) >= ceil_div(r, 2),
        "The reduced subfamily has a padded slack below ceil(r/2)",
    )
    return result
