from django.core.management.base import CommandError

from cli.commands import USAGE_ERROR, LrcCommand
from linearcode.codes import METHOD_ALIASES, DistanceAboveCap, DistanceMethod, distance_method


class Command(LrcCommand):
    help = "Computes the exact minimum distance of a code file."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--code", required=True, help="The code file.")
        parser.add_argument(
            "--method",
            choices=[*DistanceMethod.values, *METHOD_ALIASES],
            default=DistanceMethod.COLUMNS,
        )
        parser.add_argument(
            "--cap", type=int, help="Only for columns: the largest distance searched for."
        )

    def run(self, **options) -> str:
        code = self.read_code_document(options["code"])["code"]
        method, cap = distance_method(options["method"]), options["cap"]
        if cap is not None and method != DistanceMethod.COLUMNS:
            raise CommandError("--cap only applies to the columns method", returncode=USAGE_ERROR)
        data = {"n": code.n, "k": code.k, "method": method.value, "cap": cap}
        try:
            data["distance"] = code.min_distance(method, cap=cap)
        except DistanceAboveCap:
            data["distance"] = None
            return self.render(options, data, f"> {cap}")
        return self.render(options, data, str(data["distance"]))
