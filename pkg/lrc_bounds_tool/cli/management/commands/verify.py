from django.core.management.base import CommandError

from cli.commands import USAGE_ERROR, LrcCommand
from construct.rest.serializers import ConstructionPlanSerializer, OptimalityReportSerializer
from construct.verification import verify_generic, verify_optimal


class Command(LrcCommand):
    help = (
        "Verifies a code file: against its construction plan when it carries one, "
        "otherwise through its (r, delta)-locality, a witness set and the bounds."
    )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--code", required=True, help="The code file.")
        self.add_locality_arguments(parser, required=False)
        parser.add_argument("--expect-d", type=int, help="The expected minimum distance.")

    def run(self, **options) -> str:
        document = self.read_code_document(options["code"])
        code, r, delta = document["code"], options["r"], options["delta"]
        expect_d = options["expect_d"]
        if "plan" in document:
            plan = self.validated(ConstructionPlanSerializer, document["plan"])["plan"]
            if (r, delta) != (None, None) and (r, delta) != (plan.r, plan.delta):
                raise CommandError(
                    f"--r {r} --delta {delta} contradict the plan's r={plan.r}, "
                    f"delta={plan.delta}",
                    returncode=USAGE_ERROR,
                )
            report = verify_optimal(code, plan)
            if expect_d is not None:
                matches = report.distance == expect_d
                report.add("expected-distance", matches, expect_d, report.distance)
        else:
            if r is None or delta is None:
                raise CommandError(
                    "A code file without a plan needs --r and --delta", returncode=USAGE_ERROR
                )
            report = verify_generic(code, r, delta, expect_d)
        if document["identifier_mismatch"]:
            report.notes.append("The stored identifier doesn't match the code, it was modified")

        data = OptimalityReportSerializer(report).data
        output = self.render(options, data, format_checks(report))
        if not report.passed:
            self.stdout.write(output)
            names = ", ".join(check.name for check in report.failures)
            self.fail(f"Verification failed: {names}")
        return output


def format_checks(report) -> str:
    lines = [f"Code {report.code.identifier}: [{report.code.n}, {report.code.k}]"]
    if report.plan is not None:
        lines.append(f"Plan: {report.plan}")
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        line = f"  {status} {check.name}: expected {check.expected}, observed {check.observed}"
        lines.append(f"{line}. {check.detail}" if check.detail else line)
    if report.distance is not None:
        lines.append(f"Minimum distance: {report.distance}")
    lines.extend(f"Note: {note}" for note in report.notes)
    lines.append("All checks passed" if report.passed else "Some checks failed")
    return "\n".join(lines)
