from django.core.exceptions import ValidationError
from rest_framework import serializers

from gf.fields import FieldSpec


class FieldSpecSerializer(serializers.Serializer):
    """
    Serializer for a finite field, ``{"p": int, "e": int, "modulus": [int; e+1]}``
    with the modulus little-endian.

    Validation builds the ``FieldSpec``, so a non-prime characteristic or a
    reducible modulus is reported through ``.errors``.
    """

    p = serializers.IntegerField(min_value=2, help_text="The prime characteristic.")
    e = serializers.IntegerField(min_value=1, help_text="The extension degree over GF(p).")
    modulus = serializers.ListField(
        child=serializers.IntegerField(min_value=0),
        help_text="The monic irreducible modulus, little-endian (constant term first).",
    )

    def validate(self, attrs):
        try:
            attrs["spec"] = FieldSpec(attrs["p"], attrs["e"], tuple(attrs["modulus"]))
        except ValidationError as error:
            raise serializers.ValidationError({"modulus": error.messages})
        return attrs

    def to_representation(self, instance: FieldSpec):
        return {"p": instance.p, "e": instance.e, "modulus": list(instance.modulus)}

    def create(self, validated_data) -> FieldSpec:
        return validated_data["spec"]
