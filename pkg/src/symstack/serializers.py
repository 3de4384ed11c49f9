from dataclasses import dataclass, field
from typing import Dict, Optional

from rest_framework import serializers

import symstack
from symstack.multigraded import GradedDimension


def degree_key(degree) -> str:
    return ",".join(str(d) for d in degree)


def parse_degree_key(key: str):
    try:
        return tuple(int(part) for part in key.split(","))
    except ValueError:
        raise serializers.ValidationError("Degree key %r is not a comma-joined integer list" % key)


class HodgeTableField(serializers.ListField):
    """A square matrix of non-negative integers, rows indexed by p and columns by q."""

    child = serializers.ListField(child=serializers.IntegerField(min_value=0))


class VarietySerializer(serializers.Serializer):
    name = serializers.CharField(max_length=200)
    dim = serializers.IntegerField(min_value=1)
    omega_order = serializers.IntegerField(min_value=0)
    omega_tables = serializers.DictField(child=HodgeTableField(), allow_empty=False)
    line_bundles = serializers.DictField(
        child=serializers.DictField(child=HodgeTableField()), required=False
    )

    def _check_tables(self, tables, size, where):
        for key, rows in tables.items():
            try:
                int(key)
            except ValueError:
                raise serializers.ValidationError(
                    {where: "Key %r is not an integer" % key}
                )
            if len(rows) != size or any(len(row) != size for row in rows):
                raise serializers.ValidationError(
                    {where: "Table %s is not %dx%d" % (key, size, size)}
                )

    def validate(self, data):
        size = data["dim"] + 1
        self._check_tables(data["omega_tables"], size, "omega_tables")
        for label, powers in data.get("line_bundles", {}).items():
            self._check_tables(powers, size, "line_bundles.%s" % label)
        return data


class GradedDimensionSerializer(serializers.Serializer):
    """{"axes": [...], "dims": {"d1,d2": n}}, dims ordered by numeric degree."""

    axes = serializers.ListField(child=serializers.CharField(), allow_empty=False)
    dims = serializers.DictField(child=serializers.IntegerField(min_value=0))

    def to_representation(self, instance):
        return {
            "axes": list(instance.axes),
            "dims": {degree_key(degree): dim for degree, dim in instance.items()},
        }

    def validate(self, data):
        arity = len(data["axes"])
        for key in data["dims"]:
            if len(parse_degree_key(key)) != arity:
                raise serializers.ValidationError(
                    {"dims": "Degree %s does not match axes %s" % (key, data["axes"])}
                )
        return data

    def create(self, validated_data):
        return GradedDimension(
            validated_data["axes"],
            {parse_degree_key(key): dim for key, dim in validated_data["dims"].items()},
        )


@dataclass
class ResultEnvelope:
    command: str
    inputs: Dict
    truncation: Optional[int]
    result: Optional[GradedDimension]
    details: Dict = field(default_factory=dict)
    version: str = symstack.__version__


class ResultEnvelopeSerializer(serializers.Serializer):
    command = serializers.CharField()
    inputs = serializers.DictField()
    truncation = serializers.IntegerField(allow_null=True)
    version = serializers.CharField()
    result = GradedDimensionSerializer(allow_null=True)
    details = serializers.DictField(required=False)

    def to_representation(self, instance):
        data = super().to_representation(instance)
        if not data.get("details"):
            data.pop("details", None)
        return data
