"""
End-to-end checks of the codes produced by the constructions, and of any code
given with its locality parameters.

Every check is recorded with its expected and observed values so a failure
reads as a mismatch report rather than a bare boolean.
"""

import logging

from dataclasses import dataclass, field
from typing import Any, Optional

from django.core.exceptions import ValidationError

from bounds.formulas import (
    SlackUndefined,
    generalized_singleton_bound,
    improved_bound,
    large_remainder_bound,
    small_remainder_bound,
)
from construct.plans import ConstructionPlan, Variant
from linearcode.codes import DistanceAboveCap, DistanceMethod, LinearCode
from locality.params import decompose
from locality.repair import is_repair_set, locality_cover
from locality.rest.serializers import one_based
from locality.witness import bound_witness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    expected: Any = None
    observed: Any = None
    detail: str = ""


@dataclass
class OptimalityReport:
    """
    The checks run on ``code``, in order, and the distance measured on the way
    (``None`` when it couldn't be measured).
    """

    code: LinearCode
    plan: Optional[ConstructionPlan] = None
    distance: Optional[int] = None
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [check for check in self.checks if not check.passed]

    def add(self, name: str, passed: bool, expected=None, observed=None, detail: str = ""):
        check = Check(name, bool(passed), expected, observed, detail)
        self.checks.append(check)
        log = logger.info if check.passed else logger.warning
        log(
            "%s: %s %s (expected %s, observed %s)",
            self.code,
            name,
            "passed" if check.passed else "FAILED",
            expected,
            observed,
        )
        return check


def _measure_distance(report: OptimalityReport, cap: Optional[int]) -> Optional[int]:
    try:
        return report.code.min_distance(DistanceMethod.COLUMNS, cap=cap)
    except DistanceAboveCap as error:
        report.notes.append(f"No dependent set of at most {error.cap} parity-check columns")
        return None
    except ValidationError as error:
        report.notes.extend(error.messages)
        return None


def verify_optimal(code: LinearCode, plan: ConstructionPlan) -> OptimalityReport:
    """
    Checks that ``code`` is the optimal code ``plan`` promises.

    The checks are: the length and the dimension, every repair set of the
    plan and their coverage of the coordinates, the exact minimum distance
    (searched up to the predicted value), its agreement with the large or
    small remainder bound and with the generalized Singleton bound.

    Parameters
    ----------
    code: LinearCode
        The code to check, usually read back from a file.
    plan: ConstructionPlan
        The plan the code was built from.

    Returns
    -------
    OptimalityReport
        The report, ``report.passed`` telling whether every check passed.
    """
    report = OptimalityReport(code, plan)
    if not report.add("length", code.n == plan.n, plan.n, code.n).passed:
        return report
    report.add("dimension", code.k == plan.k, plan.k, code.k)

    repair_sets = plan.repair_sets()
    failing = [
        one_based(coordinates)
        for coordinates in repair_sets
        if not is_repair_set(code, coordinates, plan.r, plan.delta)
    ]
    report.add(
        "repair-sets",
        not failing,
        len(repair_sets),
        len(repair_sets) - len(failing),
        f"Not ({plan.r}, {plan.delta})-repair sets: {failing}" if failing else "",
    )
    covered = set().union(*repair_sets)
    uncovered = [i for i in range(code.n) if i not in covered]
    report.add(
        "coverage",
        not uncovered,
        code.n,
        len(covered),
        f"No repair set covers coordinate {uncovered[0] + 1}" if uncovered else "",
    )

    predicted = plan.predicted_distance
    distance = _measure_distance(report, predicted)
    report.distance = distance
    if distance is None:
        report.add("distance", False, predicted, f"> {predicted}")
        return report
    dependent = code.dependent_columns(distance)
    report.add(
        "distance",
        distance == predicted,
        predicted,
        distance,
        f"Dependent parity-check columns {one_based(dependent)}" if dependent else "",
    )

    params = decompose(code.n, code.k, plan.r, plan.delta)
    bound = large_remainder_bound if plan.variant == Variant.A else small_remainder_bound
    try:
        expected = bound(params)
    except ValidationError as error:
        report.add("optimality", False, None, distance, " ".join(error.messages))
    else:
        report.add("optimality", distance == expected, expected, distance, bound.__name__)
    generalized = generalized_singleton_bound(params)
    report.add("singleton", distance <= generalized, f"<= {generalized}", distance)
    return report


def verify_generic(
    code: LinearCode, r: int, delta: int, expect_d: Optional[int] = None
) -> OptimalityReport:
    """
    Checks a code that carries no construction plan: its (r, delta)-locality,
    a witness set of rank k-1, and that the exact distance respects every
    bound that applies.

    Raises
    ------
    ValidationError
        If (n, k, r, delta) aren't valid LRC parameters.
    SearchLimitExceeded
        If one of the searches goes past its guard.
    """
    params = decompose(code.n, code.k, r, delta)
    report = OptimalityReport(code)
    try:
        family = locality_cover(code, r, delta)
    except ValidationError as error:
        report.add("locality", False, "every coordinate covered", None, " ".join(error.messages))
        return report
    report.add("locality", True, "every coordinate covered", f"{len(family)} repair sets")

    distance = _measure_distance(report, None)
    report.distance = distance
    if distance is None:
        report.add("distance", False, "a dependent set of columns", None)
        return report

    witness = bound_witness(code, r, delta, family)
    report.add(
        "witness",
        distance <= witness.distance_bound,
        f"<= {witness.distance_bound}",
        distance,
        f"Rank {code.k - 1} set {one_based(witness.coordinates)} ({witness.case.value})",
    )
    M = witness.exclusive_count
    try:
        improved = improved_bound(params, M)
    except SlackUndefined as error:
        report.notes.append(f"The improved bound is undefined for M={M}: {error}")
    else:
        report.add("improved", distance <= improved, f"<= {improved}", distance, f"M={M}")
    generalized = generalized_singleton_bound(params)
    report.add("singleton", distance <= generalized, f"<= {generalized}", distance)
    if expect_d is not None:
        report.add("expected-distance", distance == expect_d, expect_d, distance)
    return report
