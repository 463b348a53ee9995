from django.core.exceptions import ValidationError
from rest_framework import serializers

from construct.plans import ConstructionPlan, Variant
from linearcode.rest.serializers import LinearCodeSerializer


class ConstructionPlanSerializer(serializers.Serializer):
    """
    Serializer for a plan document,
    ``{"variant": "A"|"B", "r", "delta", "m", "u", "v", "w", "q", "e"}``.

    Every violated condition of the plan is reported at once. On output the
    document also carries the derived values and the identifier of the plan.
    """

    variant = serializers.ChoiceField(choices=Variant.choices)
    r = serializers.IntegerField(help_text="The locality.")
    delta = serializers.IntegerField(help_text="The local distance.")
    m = serializers.IntegerField(help_text="The remainder of n modulo r+delta-1.")
    u = serializers.IntegerField(help_text="k = ur + v.")
    v = serializers.IntegerField(help_text="k = ur + v.")
    w = serializers.IntegerField(help_text="The quotient of n by r+delta-1.")
    q = serializers.IntegerField(help_text="The prime size of the base field.")
    e = serializers.IntegerField(help_text="The extension degree of the code's field.")

    def validate(self, attrs):
        try:
            attrs["plan"] = ConstructionPlan(**attrs)
        except ValidationError as error:
            raise serializers.ValidationError(error.messages)
        return attrs

    def to_representation(self, instance: ConstructionPlan):
        return {
            "variant": instance.variant.value,
            "r": instance.r,
            "delta": instance.delta,
            "m": instance.m,
            "u": instance.u,
            "v": instance.v,
            "w": instance.w,
            "q": instance.q,
            "e": instance.e,
            "n": instance.n,
            "k": instance.k,
            "h": instance.h,
            "t": instance.t,
            "predicted_distance": instance.predicted_distance,
            "notes": instance.notes,
            "identifier": instance.identifier,
        }

    def create(self, validated_data) -> ConstructionPlan:
        return validated_data["plan"]


def code_document(code, plan: ConstructionPlan) -> dict:
    """
    The code document of a constructed code, with its plan.
    """
    data = LinearCodeSerializer(code).data
    data["plan"] = ConstructionPlanSerializer(plan).data
    return data


class CheckSerializer(serializers.Serializer):
    name = serializers.CharField(read_only=True)
    passed = serializers.BooleanField(read_only=True)
    expected = serializers.JSONField(read_only=True)
    observed = serializers.JSONField(read_only=True)
    detail = serializers.CharField(read_only=True)


class OptimalityReportSerializer(serializers.Serializer):
    """
    Read only serializer for an ``OptimalityReport``.
    """

    code = serializers.CharField(read_only=True, source="code.identifier")
    n = serializers.IntegerField(read_only=True, source="code.n")
    k = serializers.IntegerField(read_only=True, source="code.k")
    plan = ConstructionPlanSerializer(read_only=True, allow_null=True)
    distance = serializers.IntegerField(read_only=True, allow_null=True)
    passed = serializers.BooleanField(read_only=True)
    checks = CheckSerializer(many=True, read_only=True)
    notes = serializers.ListField(child=serializers.CharField(), read_only=True)
