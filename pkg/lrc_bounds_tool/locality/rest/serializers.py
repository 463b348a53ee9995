from django.core.exceptions import ValidationError
from rest_framework import serializers

from locality.families import RepairFamily
from locality.params import LrcParams


def one_based(indices) -> list[int]:
    return [i + 1 for i in sorted(indices)]


class LrcParamsSerializer(serializers.Serializer):
    """
    Serializer for the (n, k, r, delta) parameters. The output adds the
    decomposition n = w(r+delta-1) + m, k = ur + v and the feasibility flags.
    """

    n = serializers.IntegerField(min_value=1, help_text="The length of the code.")
    k = serializers.IntegerField(min_value=1, help_text="The dimension of the code.")
    r = serializers.IntegerField(min_value=1, help_text="The locality.")
    delta = serializers.IntegerField(min_value=2, help_text="The local distance.")

    def validate(self, attrs):
        try:
            attrs["params"] = LrcParams(attrs["n"], attrs["k"], attrs["r"], attrs["delta"])
        except ValidationError as error:
            raise serializers.ValidationError(error.messages)
        return attrs

    def to_representation(self, instance: LrcParams):
        return {
            "n": instance.n,
            "k": instance.k,
            "r": instance.r,
            "delta": instance.delta,
            "w": instance.w,
            "m": instance.m,
            "u": instance.u,
            "v": instance.v,
            "feasibility": instance.feasibility,
        }

    def create(self, validated_data) -> LrcParams:
        return validated_data["params"]


class RepairFamilySerializer(serializers.Serializer):
    """
    Serializer for a family document, ``{"n": int, "blocks": [[int, ...], ...]}``
    with 1-based coordinates.
    """

    n = serializers.IntegerField(min_value=1, help_text="The size of the ground set.")
    blocks = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=1), min_length=1),
        allow_empty=True,
        help_text="The blocks, in order, as lists of 1-based coordinates.",
    )

    def validate(self, attrs):
        blocks = tuple(frozenset(i - 1 for i in block) for block in attrs["blocks"])
        try:
            attrs["family"] = RepairFamily(attrs["n"], blocks)
        except ValidationError as error:
            raise serializers.ValidationError({"blocks": error.messages})
        return attrs

    def to_representation(self, instance: RepairFamily):
        return {
            "n": instance.n,
            "blocks": [one_based(block) for block in instance.blocks],
            "identifier": instance.identifier,
        }

    def create(self, validated_data) -> RepairFamily:
        return validated_data["family"]


class OverlapBreakSerializer(serializers.Serializer):
    """
    Read only serializer for the outcome of breaking the heavy overlaps, with
    1-based block positions and coordinates.
    """

    touched = serializers.SerializerMethodField(help_text="The blocks met by the loops.")
    seeds = serializers.SerializerMethodField(help_text="The blocks marked by the loops.")
    redundant = serializers.SerializerMethodField(
        help_text="The touched blocks removed without losing rank."
    )
    exclusive = serializers.SerializerMethodField(
        help_text="The coordinates only the removed blocks cover."
    )
    exclusive_count = serializers.IntegerField(read_only=True)

    def get_touched(self, instance) -> list[int]:
        return one_based(instance.touched)

    def get_seeds(self, instance) -> list[int]:
        return one_based(instance.seeds)

    def get_redundant(self, instance) -> list[int]:
        return one_based(instance.removed)

    def get_exclusive(self, instance) -> list[int]:
        return one_based(instance.exclusive)


class BoundWitnessSerializer(serializers.Serializer):
    """
    Read only serializer for a witness set of rank k-1.
    """

    case = serializers.CharField(read_only=True)
    coordinates = serializers.SerializerMethodField(help_text="The 1-based witness set.")
    size = serializers.SerializerMethodField(help_text="The size of the witness set.")
    lower_bound = serializers.IntegerField(
        read_only=True, help_text="The size the construction guarantees."
    )
    exclusive_count = serializers.IntegerField(read_only=True)
    distance_bound = serializers.IntegerField(
        read_only=True, help_text="The certified bound d <= n - |S|."
    )
    cover = RepairFamilySerializer(read_only=True)
    overlap_break = OverlapBreakSerializer(read_only=True)

    def get_coordinates(self, instance) -> list[int]:
        return one_based(instance.coordinates)

    def get_size(self, instance) -> int:
        return len(instance.coordinates)
