from rest_framework import serializers

from locality.rest.serializers import LrcParamsSerializer


class RegimeSerializer(serializers.Serializer):
    """
    Read only serializer for a classification leaf and its condition chain.
    """

    label = serializers.CharField(read_only=True)
    alias = serializers.CharField(read_only=True, allow_null=True)
    description = serializers.CharField(read_only=True, source="label.label")
    chain = serializers.SerializerMethodField(
        help_text="The conditions evaluated on the way to the leaf, in order."
    )
    citations = serializers.ListField(child=serializers.CharField(), read_only=True)

    def get_chain(self, instance) -> list[dict]:
        return [{"condition": condition, "holds": holds} for condition, holds in instance.chain]


class BoundReportSerializer(serializers.Serializer):
    """
    Read only serializer for a ``BoundReport``.
    """

    params = LrcParamsSerializer(read_only=True)
    singleton = serializers.IntegerField(read_only=True, help_text="n - k + 1.")
    generalized = serializers.IntegerField(
        read_only=True, help_text="n - k + 1 - (ceil(k/r) - 1)(delta - 1)."
    )
    disjoint = serializers.IntegerField(
        read_only=True,
        allow_null=True,
        help_text="The improved bound for pairwise disjoint repair sets.",
    )
    exclusive_count = serializers.IntegerField(read_only=True, allow_null=True)
    improved = serializers.IntegerField(
        read_only=True, allow_null=True, help_text="The improved bound for the exclusive count."
    )
    large_remainder_applicable = serializers.BooleanField(read_only=True)
    large_remainder = serializers.IntegerField(read_only=True, allow_null=True)
    small_remainder_applicable = serializers.BooleanField(read_only=True)
    small_remainder = serializers.IntegerField(read_only=True, allow_null=True)
    dmax = serializers.IntegerField(
        read_only=True, allow_null=True, help_text="The largest achievable distance, if known."
    )
    singleton_unachievable = serializers.BooleanField(read_only=True)
    singleton_unachievable_specialized = serializers.BooleanField(read_only=True)
    regime = RegimeSerializer(read_only=True, allow_null=True)
    citations = serializers.ListField(child=serializers.CharField(), read_only=True)
    open_questions = serializers.ListField(child=serializers.CharField(), read_only=True)
