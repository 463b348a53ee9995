from construct.builders import construct
from construct.plans import Variant
from construct.rest.serializers import ConstructionPlanSerializer, code_document
from cli.commands import LrcCommand
from utils.documents import write_document

PLAN_FIELDS = ["r", "delta", "m", "u", "v", "w", "q", "e"]


class Command(LrcCommand):
    help = "Builds an optimal code from a construction plan and writes it to a file."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--variant", choices=Variant.values, required=True)
        for name in PLAN_FIELDS:
            parser.add_argument(f"--{name}", type=int, required=True)
        parser.add_argument("--out", required=True, help="The code file to write.")
        parser.add_argument(
            "--seed",
            type=int,
            help="The seed of the random independent set, only drawn when q < n.",
        )

    def run(self, **options) -> str:
        data = {name: options[name] for name in ["variant"] + PLAN_FIELDS}
        plan = self.validated(ConstructionPlanSerializer, data)["plan"]
        code = construct(plan, options["seed"])
        document = code_document(code, plan)
        write_document(options["out"], document)
        lines = [
            f"Wrote the [{code.n}, {code.k}] code over GF({plan.q}^{plan.e}) to {options['out']}",
            f"Predicted minimum distance: {plan.predicted_distance}",
        ]
        lines.extend(f"Note: {note}" for note in plan.notes)
        return self.render(options, document["plan"], "\n".join(lines))
