"""
Classification of (n, k, r, delta) by whether the generalized Singleton bound
is achievable, following the known results tree.
"""

import logging

from dataclasses import dataclass, field
from typing import Optional

from django.core.exceptions import ValidationError
from django.db import models

from locality.params import LrcParams

logger = logging.getLogger(__name__)


class RegimeLabel(models.TextChoices):
    DIVISIBLE_OPTIMAL = "divisible-optimal", "Optimal codes exist, (r+delta-1) divides n"
    R_DIVIDES_K_UNACHIEVABLE = (
        "r-divides-k-unachievable",
        "Unachievable, (r+delta-1) doesn't divide n and r divides k",
    )
    M_LARGE_OPTIMAL = "m-large-optimal", "Optimal codes exist, m >= v+delta-1"
    LARGE_REMAINDER_TIGHT = (
        "corollary7-tight",
        "Unachievable, the large remainder bound is tight and met by variant A",
    )
    SMALL_REMAINDER_TIGHT = (
        "corollary8-tight",
        "Unachievable, the small remainder bound is tight and met by variant B",
    )
    GENERIC_UNACHIEVABLE = (
        "generic-unachievable",
        "Unachievable, m < v+delta-1 and u >= 2(r-v)+1",
    )
    SONGETAL_OPTIMAL_A = "songetal-optimal-a", "Optimal codes exist, r-v >= u and w >= r+delta-1-m"
    SONGETAL_OPTIMAL_B = "songetal-optimal-b", "Optimal codes exist, w >= 2(r+delta-1-m)"
    WESTERBACK_UNACHIEVABLE_A = (
        "westerback-unachievable-a",
        "Unachievable, r+delta-1-m <= w < 2(r+delta-1-m)-1 and r-v < u",
    )
    WESTERBACK_UNACHIEVABLE_B = (
        "westerback-unachievable-b",
        "Unachievable, w < r+delta-1-m and r-v < u",
    )
    OVERLAP_UNACHIEVABLE = (
        "corollary10-unachievable",
        "Unachievable by the improved bound, w < r+delta-1-m, u <= r-v, 2v > r",
    )
    OPEN_SMALL_V = "open-RI", "Still open, w < r+delta-1-m, u <= r-v, 2v <= r"
    OPEN_LARGE_V = "open-RII", "Still open, w < r+delta-1-m, u <= r-v, 2v > r"
    OPEN_BOUNDARY = (
        "open-boundary",
        "Not covered by the known results, w = 2(r+delta-1-m)-1 and r-v < u",
    )


CITATIONS = {
    RegimeLabel.DIVISIBLE_OPTIMAL: [
        "Rawat, Koyluoglu, Silberstein, Vishwanath 2014",
        "Song, Dau, Yuen, Li 2014",
        "Tamo, Barg 2014",
    ],
    RegimeLabel.R_DIVIDES_K_UNACHIEVABLE: ["Song, Dau, Yuen, Li 2014"],
    RegimeLabel.M_LARGE_OPTIMAL: ["Tamo, Papailiopoulos, Dimakis 2016", "Song, Dau, Yuen, Li 2014"],
    RegimeLabel.LARGE_REMAINDER_TIGHT: ["Song, Dau, Yuen, Li 2014", "large remainder bound"],
    RegimeLabel.SMALL_REMAINDER_TIGHT: ["Song, Dau, Yuen, Li 2014", "small remainder bound"],
    RegimeLabel.GENERIC_UNACHIEVABLE: ["Song, Dau, Yuen, Li 2014"],
    RegimeLabel.SONGETAL_OPTIMAL_A: ["Song, Dau, Yuen, Li 2014"],
    RegimeLabel.SONGETAL_OPTIMAL_B: ["Song, Dau, Yuen, Li 2014"],
    RegimeLabel.WESTERBACK_UNACHIEVABLE_A: ["Westerback, Freij-Hollanti, Ernvall, Hollanti 2016"],
    RegimeLabel.WESTERBACK_UNACHIEVABLE_B: ["Westerback, Freij-Hollanti, Ernvall, Hollanti 2016"],
    RegimeLabel.OVERLAP_UNACHIEVABLE: ["improved bound with the overlap slack"],
    RegimeLabel.OPEN_SMALL_V: [],
    RegimeLabel.OPEN_LARGE_V: [],
    RegimeLabel.OPEN_BOUNDARY: [],
}

OPEN_LABELS = {RegimeLabel.OPEN_SMALL_V, RegimeLabel.OPEN_LARGE_V, RegimeLabel.OPEN_BOUNDARY}

# Descriptive names of the leaves that are labelled after the result settling them
LABEL_ALIASES = {
    RegimeLabel.LARGE_REMAINDER_TIGHT: "large-remainder-tight",
    RegimeLabel.SMALL_REMAINDER_TIGHT: "small-remainder-tight",
    RegimeLabel.OVERLAP_UNACHIEVABLE: "overlap-unachievable",
    RegimeLabel.OPEN_SMALL_V: "open-small-v",
    RegimeLabel.OPEN_LARGE_V: "open-large-v",
}


@dataclass(frozen=True)
class Regime:
    """
    The leaf reached by ``classify`` and the conditions evaluated on the way,
    as (condition, value) pairs in order.
    """

    label: RegimeLabel
    chain: tuple[tuple[str, bool], ...] = field(default_factory=tuple)

    @property
    def citations(self) -> list[str]:
        return CITATIONS[self.label]

    @property
    def alias(self) -> Optional[str]:
        return LABEL_ALIASES.get(self.label)

    @property
    def is_open(self) -> bool:
        return self.label in OPEN_LABELS


class _Chain:
    def __init__(self):
        self.steps: list[tuple[str, bool]] = []

    def __call__(self, condition: str, value: bool) -> bool:
        self.steps.append((condition, bool(value)))
        return bool(value)

    def leaf(self, label: RegimeLabel) -> Regime:
        return Regime(label, tuple(self.steps))


def classify(params: LrcParams) -> Regime:
    """
    Walks the tree of known results on the generalized Singleton bound.

    Raises
    ------
    ValidationError
        If u = 0 (k = r), where the classic Singleton bound applies.
    """
    r, delta, w, m, u, v = params.r, params.delta, params.w, params.m, params.u, params.v
    s = params.block_size
    if u == 0:
        raise ValidationError("The classification needs u >= 1, i.e. k > r")
    check = _Chain()
    if check("m = 0", m == 0):
        return check.leaf(RegimeLabel.DIVISIBLE_OPTIMAL)
    if check("r | k", v == r):
        return check.leaf(RegimeLabel.R_DIVIDES_K_UNACHIEVABLE)
    if check("m >= v+delta-1", m >= v + delta - 1):
        return check.leaf(RegimeLabel.M_LARGE_OPTIMAL)

    if check("u >= 2(r-v)+1", u >= 2 * (r - v) + 1):
        if (
            check("2v > r", 2 * v > r)
            and check("m >= delta", m >= delta)
            and check("u >= r+delta-1", u >= s)
            and check("u >= 2(r+delta-1-m)", u >= 2 * (s - m))
        ):
            return check.leaf(RegimeLabel.LARGE_REMAINDER_TIGHT)
        if (
            check("m <= delta-1", m <= delta - 1)
            and check("2v > r", 2 * v > r)
            and check("u >= 2r+delta-1", u >= 2 * r + delta - 1)
        ):
            return check.leaf(RegimeLabel.SMALL_REMAINDER_TIGHT)
        return check.leaf(RegimeLabel.GENERIC_UNACHIEVABLE)

    if check("r-v >= u", r - v >= u) and check("w >= r+delta-1-m", w >= s - m):
        return check.leaf(RegimeLabel.SONGETAL_OPTIMAL_A)
    if check("w >= 2(r+delta-1-m)", w >= 2 * (s - m)):
        return check.leaf(RegimeLabel.SONGETAL_OPTIMAL_B)
    if (
        check("r+delta-1-m <= w < 2(r+delta-1-m)-1", s - m <= w < 2 * (s - m) - 1)
        and check("r-v < u", r - v < u)
    ):
        return check.leaf(RegimeLabel.WESTERBACK_UNACHIEVABLE_A)
    if check("w < r+delta-1-m", w < s - m):
        if check("r-v < u", r - v < u):
            return check.leaf(RegimeLabel.WESTERBACK_UNACHIEVABLE_B)
        if not check("2v > r", 2 * v > r):
            return check.leaf(RegimeLabel.OPEN_SMALL_V)
        if check("u > 1", u > 1) and check(
            "m u(u-1) < (r+delta-1) u(u-1) - w(w+1)(r-v)",
            m * u * (u - 1) < s * u * (u - 1) - w * (w + 1) * (r - v),
        ):
            return check.leaf(RegimeLabel.OVERLAP_UNACHIEVABLE)
        return check.leaf(RegimeLabel.OPEN_LARGE_V)
    logger.debug("%s falls between the known results", params)
    return check.leaf(RegimeLabel.OPEN_BOUNDARY)
