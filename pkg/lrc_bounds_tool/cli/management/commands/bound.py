from django.core.management.base import CommandError
from django.db import models

from bounds.formulas import (
    disjoint_repair_bound,
    dmax_formula,
    generalized_singleton_bound,
    improved_bound,
    large_remainder_bound,
    singleton_bound,
    small_remainder_bound,
)
from bounds.reports import build_report
from bounds.rest.serializers import BoundReportSerializer
from cli.commands import USAGE_ERROR, LrcCommand, format_report


class BoundKind(models.TextChoices):
    ALL = "all", "Every bound, as in classify"
    SINGLETON = "singleton", "n - k + 1"
    GENERALIZED = "generalized", "The generalized Singleton bound"
    IMPROVED = "improved", "The improved bound for an exclusive count"
    DISJOINT = "disjoint", "The improved bound for disjoint repair sets"
    LARGE_REMAINDER = "large-remainder", "The bound for delta <= m"
    SMALL_REMAINDER = "small-remainder", "The bound for 0 < m <= delta-1"
    DMAX = "dmax", "The largest achievable distance, if known"


FORMULAS = {
    BoundKind.SINGLETON: singleton_bound,
    BoundKind.GENERALIZED: generalized_singleton_bound,
    BoundKind.DISJOINT: disjoint_repair_bound,
    BoundKind.LARGE_REMAINDER: large_remainder_bound,
    BoundKind.SMALL_REMAINDER: small_remainder_bound,
    BoundKind.DMAX: dmax_formula,
}


class Command(LrcCommand):
    help = "Evaluates one upper bound on the minimum distance, or all of them."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--kind", choices=BoundKind.values, default=BoundKind.ALL, help="The bound."
        )
        self.add_params_arguments(parser)
        parser.add_argument(
            "--M",
            "--exclusive-count",
            dest="M",
            type=int,
            help="The exclusive count M of a code, needed by the improved bound.",
        )

    def run(self, **options) -> str:
        params = self.params_from(options)
        kind, M = BoundKind(options["kind"]), options["M"]
        if kind == BoundKind.ALL:
            report = build_report(params, M)
            return self.render(
                options, BoundReportSerializer(report).data, format_report(report)
            )
        if kind == BoundKind.IMPROVED:
            if M is None:
                raise CommandError("The improved bound needs --M", returncode=USAGE_ERROR)
            value = improved_bound(params, M)
        else:
            value = FORMULAS[kind](params)
        data = {"kind": kind.value, **params_data(params), "exclusive_count": M, "value": value}
        return self.render(options, data, "n/a" if value is None else str(value))


def params_data(params) -> dict:
    return {"n": params.n, "k": params.k, "r": params.r, "delta": params.delta}
