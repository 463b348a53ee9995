from django.core.exceptions import ValidationError
from rest_framework import serializers

from gf.fields import FieldElement
from gf.rest.serializers import FieldSpecSerializer
from matgf.matrices import MatrixGF, from_elements


class MatrixSerializer(serializers.Serializer):
    """
    Serializer for a dense matrix over a finite field,
    ``{"field": ..., "rows": r, "cols": c, "data": [[element, ...], ...]}``,
    row-major, each element being its little-endian coefficient vector.
    """

    field = FieldSpecSerializer(help_text="The field of the entries.")
    rows = serializers.IntegerField(min_value=0, help_text="The number of rows.")
    cols = serializers.IntegerField(min_value=0, help_text="The number of columns.")
    data = serializers.ListField(
        child=serializers.ListField(
            child=serializers.ListField(child=serializers.IntegerField(min_value=0))
        ),
        allow_empty=True,
        help_text="Row-major entries, each one a list of e coefficients, constant term first.",
    )

    def validate(self, attrs):
        spec = attrs["field"]["spec"]
        rows, cols, data = attrs["rows"], attrs["cols"], attrs["data"]
        if len(data) != rows or any(len(row) != cols for row in data):
            raise serializers.ValidationError(
                {"data": f"Expected {rows} rows of {cols} entries each."}
            )
        try:
            entries = [[FieldElement(tuple(x), spec) for x in row] for row in data]
        except ValidationError as error:
            raise serializers.ValidationError({"data": error.messages})
        attrs["matrix"] = (
            from_elements(spec, entries)
            if rows
            else MatrixGF(spec, spec.galois_field.Zeros((0, cols)))
        )
        return attrs

    def to_representation(self, instance: MatrixGF):
        return {
            "field": FieldSpecSerializer(instance.spec).data,
            "rows": instance.rows,
            "cols": instance.cols,
            "data": [[list(x.coeffs) for x in row] for row in instance.to_elements()],
        }

    def create(self, validated_data) -> MatrixGF:
        return validated_data["matrix"]
