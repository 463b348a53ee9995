"""
Every bound that applies to a set of parameters, gathered in one report.
"""

import logging

from dataclasses import dataclass, field
from typing import Optional

from bounds.formulas import (
    SlackUndefined,
    disjoint_repair_bound,
    dmax_formula,
    generalized_singleton_bound,
    improved_bound,
    large_remainder_applicable,
    large_remainder_bound,
    singleton_bound,
    singleton_unachievable,
    singleton_unachievable_specialized,
    small_remainder_applicable,
    small_remainder_bound,
)
from bounds.regimes import Regime, classify
from locality.params import LrcParams

logger = logging.getLogger(__name__)

EXCLUSIVE_COUNT_QUESTION = (
    "The exclusive count depends on the order the heavy overlaps are broken in and on "
    "the redundant blocks chosen; which choice gives the best bound is unknown."
)
OPEN_LEAF_QUESTION = (
    "Whether the generalized Singleton bound is achievable for these parameters is open."
)


@dataclass(frozen=True)
class BoundReport:
    """
    The bounds on the minimum distance for ``params``.

    ``improved`` is only present when an exclusive count was given; the
    remainder bounds and ``dmax`` only where they apply. ``regime`` is
    ``None`` for u = 0.
    """

    params: LrcParams
    singleton: int
    generalized: int
    disjoint: Optional[int]
    large_remainder_applicable: bool
    large_remainder: Optional[int]
    small_remainder_applicable: bool
    small_remainder: Optional[int]
    dmax: Optional[int]
    singleton_unachievable: bool
    singleton_unachievable_specialized: bool
    regime: Optional[Regime]
    exclusive_count: Optional[int] = None
    improved: Optional[int] = None
    open_questions: list[str] = field(default_factory=list)

    @property
    def citations(self) -> list[str]:
        return self.regime.citations if self.regime is not None else []

    @property
    def best(self) -> int:
        """
        The smallest upper bound in the report.
        """
        values = [self.singleton, self.generalized, self.disjoint, self.improved]
        return min(value for value in values if value is not None)


def build_report(params: LrcParams, exclusive_count: Optional[int] = None) -> BoundReport:
    """
    Evaluates every bound on ``params``; the improved bound only when the
    ``exclusive_count`` of a code is given.

    Raises
    ------
    SlackUndefined
        If the improved bound is requested with n - M < r+delta-1 and u > M.
    """
    try:
        disjoint = disjoint_repair_bound(params)
    except SlackUndefined:
        logger.debug("%s: the disjoint repair bound is undefined", params)
        disjoint = None
    large = large_remainder_applicable(params)
    small = small_remainder_applicable(params)
    regime = classify(params) if params.u >= 1 else None
    open_questions = []
    improved = None
    if exclusive_count is not None:
        improved = improved_bound(params, exclusive_count)
        open_questions.append(EXCLUSIVE_COUNT_QUESTION)
    if regime is not None and regime.is_open:
        open_questions.append(OPEN_LEAF_QUESTION)
    return BoundReport(
        params=params,
        singleton=singleton_bound(params),
        generalized=generalized_singleton_bound(params),
        disjoint=disjoint,
        large_remainder_applicable=large,
        large_remainder=large_remainder_bound(params) if large else None,
        small_remainder_applicable=small,
        small_remainder=small_remainder_bound(params) if small else None,
        dmax=dmax_formula(params),
        singleton_unachievable=singleton_unachievable(params),
        singleton_unachievable_specialized=singleton_unachievable_specialized(params),
        regime=regime,
        exclusive_count=exclusive_count,
        improved=improved,
        open_questions=open_questions,
    )
