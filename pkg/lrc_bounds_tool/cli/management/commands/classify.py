from django.core.management.base import CommandError

from bounds.reports import build_report
from bounds.rest.serializers import BoundReportSerializer
from cli.commands import USAGE_ERROR, LrcCommand, format_report


class Command(LrcCommand):
    help = "Classifies (n, k, r, delta) and lists every bound that applies."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_params_arguments(parser)

    def run(self, **options) -> str:
        params = self.params_from(options)
        if not params.is_feasible:
            failing = [name for name, holds in params.feasibility.items() if not holds]
            raise CommandError(
                f"No code has the parameters {params}: {', '.join(failing)} violated",
                returncode=USAGE_ERROR,
            )
        report = build_report(params)
        return self.render(options, BoundReportSerializer(report).data, format_report(report))
