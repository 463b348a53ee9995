import logging

from django.core.exceptions import ValidationError
from rest_framework import serializers

from gf.rest.serializers import FieldSpecSerializer
from linearcode.codes import LinearCode
from matgf.rest.serializers import MatrixSerializer

logger = logging.getLogger(__name__)


class LinearCodeSerializer(serializers.Serializer):
    """
    Serializer for a linear code document,
    ``{"field": ..., "n": ..., "k": ..., "G": matrix, "H": matrix?}``.

    On output the document also carries the ``identifier`` of the code, a hash
    of its canonical generator matrix. On input a stored identifier that
    doesn't match the content is only reported (``identifier_mismatch``), it
    doesn't invalidate the document. A ``plan`` entry, written by the
    constructions, is kept as is for the verification flow.
    """

    field = FieldSpecSerializer(help_text="The field of the code.")
    n = serializers.IntegerField(min_value=1, help_text="The length of the code.")
    k = serializers.IntegerField(min_value=0, help_text="The dimension of the code.")
    G = MatrixSerializer(help_text="A k x n generator matrix of full row rank.")
    H = MatrixSerializer(
        required=False, help_text="An optional (n-k) x n parity-check matrix of full row rank."
    )
    identifier = serializers.CharField(
        required=False,
        max_length=16,
        help_text="A hash of the canonical generator matrix, to detect modified files.",
    )
    plan = serializers.JSONField(
        required=False, help_text="The construction plan the code was built from, if any."
    )

    def validate(self, attrs):
        spec = attrs["field"]["spec"]
        G = attrs["G"]["matrix"]
        H = attrs["H"]["matrix"] if "H" in attrs else None
        if G.shape != (attrs["k"], attrs["n"]):
            raise serializers.ValidationError(
                {"G": f"Expected a {attrs['k']}x{attrs['n']} matrix, got {G.rows}x{G.cols}."}
            )
        try:
            attrs["code"] = LinearCode(spec, G, H)
        except ValidationError as error:
            raise serializers.ValidationError(error.messages)
        stored = attrs.get("identifier")
        attrs["identifier_mismatch"] = bool(stored) and stored != attrs["code"].identifier
        if attrs["identifier_mismatch"]:
            logger.warning(
                "The stored identifier %s doesn't match the content (%s), the file was modified",
                stored,
                attrs["code"].identifier,
            )
        return attrs

    def to_representation(self, instance: LinearCode):
        data = {
            "field": FieldSpecSerializer(instance.spec).data,
            "n": instance.n,
            "k": instance.k,
            "G": MatrixSerializer(instance.G).data,
            "identifier": instance.identifier,
        }
        if instance.H is not None:
            data["H"] = MatrixSerializer(instance.H).data
        return data

    def create(self, validated_data) -> LinearCode:
        return validated_data["code"]
