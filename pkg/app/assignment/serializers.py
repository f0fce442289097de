"""
Serializers for assignment tables.
"""

from rest_framework import serializers


class AssignmentTableSerializer(serializers.Serializer):
    """Serializer for the full table of global assignments."""

    assignment_count = serializers.IntegerField(min_value=0)
    rays = serializers.ListField(child=serializers.CharField())
    rows = serializers.ListField(
        child=serializers.ListField(
            child=serializers.IntegerField(min_value=0, max_value=1)
        )
    )

    def validate(self, attrs):
        """Every row has one value per ray, one row per assignment."""
        if len(attrs['rows']) != attrs['assignment_count']:
            raise serializers.ValidationError(
                {'rows': 'The number of rows must equal assignment_count.'}
            )
        width = len(attrs['rays'])
        if any(len(row) != width for row in attrs['rows']):
            raise serializers.ValidationError(
                {'rows': f'Every row needs {width} values.'}
            )
        return attrs


def assignment_table(scenario, assignments):
    """Rays as columns in document order, rows in enumeration order."""
    return {
        'assignment_count': len(assignments),
        'rays': scenario.labels,
        'rows': [list(a.values) for a in assignments],
    }
