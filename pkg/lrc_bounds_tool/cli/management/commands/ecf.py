from bounds.formulas import SlackUndefined, improved_bound
from cli.commands import LrcCommand, yes_no
from locality.families import extract_essential_cover
from locality.overlaps import break_heavy_overlaps, exclusive_count_landscape, extend_redundant
from locality.params import decompose
from locality.repair import locality_cover
from locality.rest.serializers import OverlapBreakSerializer, RepairFamilySerializer, one_based


class Command(LrcCommand):
    help = (
        "Extracts an essential cover from the repair sets of a code file, breaks its heavy "
        "overlaps and reports the exclusive count."
    )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--code", required=True, help="The code file.")
        self.add_locality_arguments(parser)
        parser.add_argument(
            "--all-orders",
            action="store_true",
            help="Also list the exclusive count of every order the overlaps can be broken in.",
        )

    def run(self, **options) -> str:
        code = self.read_code_document(options["code"])["code"]
        r, delta = options["r"], options["delta"]
        params = decompose(code.n, code.k, r, delta)
        cover = extract_essential_cover(locality_cover(code, r, delta), params)
        result = extend_redundant(code, break_heavy_overlaps(cover, delta))
        try:
            improved = improved_bound(params, result.exclusive_count)
        except SlackUndefined:
            improved = None
        data = {
            "params": {"n": code.n, "k": code.k, "r": r, "delta": delta},
            "cover": RepairFamilySerializer(cover).data,
            "conditions": cover.conditions(delta),
            "overlap_break": OverlapBreakSerializer(result).data,
            "exclusive_count": result.exclusive_count,
            "improved": improved,
        }
        lines = [f"Essential cover of {len(cover)} repair sets:"]
        lines.extend(f"  {one_based(block)}" for block in cover.blocks)
        lines.extend(f"{name}: {yes_no(holds)}" for name, holds in data["conditions"].items())
        lines.append(f"Touched blocks: {one_based(result.touched)}")
        lines.append(f"Redundant blocks: {one_based(result.removed)}")
        lines.append(f"Exclusive coordinates: {one_based(result.exclusive)}")
        lines.append(f"Exclusive count M: {result.exclusive_count}")
        lines.append(f"Improved bound: {'n/a' if improved is None else improved}")
        if options["all_orders"]:
            landscape = exclusive_count_landscape(code, cover, delta)
            data["all_orders"] = OverlapBreakSerializer(landscape, many=True).data
            lines.append(f"{len(landscape)} distinct outcomes over every breaking order:")
            lines.extend(
                f"  touched {one_based(outcome.touched)}, redundant "
                f"{one_based(outcome.removed)}, M = {outcome.exclusive_count}"
                for outcome in landscape
            )
        return self.render(options, data, "\n".join(lines))
