from bounds.formulas import overlap_slack
from cli.commands import LrcCommand


class Command(LrcCommand):
    help = "Evaluates the guaranteed padded slack of b repair sets covering a coordinates."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_locality_arguments(parser)
        parser.add_argument("--a", type=int, required=True, help="The number of coordinates.")
        parser.add_argument("--b", type=int, required=True, help="The number of repair sets.")

    def run(self, **options) -> str:
        r, delta, a, b = options["r"], options["delta"], options["a"], options["b"]
        value = overlap_slack(r, delta, a, b)
        data = {"r": r, "delta": delta, "a": a, "b": b, "phi": value}
        return self.render(options, data, str(value))
