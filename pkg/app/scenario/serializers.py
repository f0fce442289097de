"""
Serializers for scenario documents.
"""

import io
import logging
from fractions import Fraction

from rest_framework import serializers
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from scenario.domain import Origin, build_scenario, compare_with_derived

logger = logging.getLogger(__name__)


class RationalField(serializers.Field):
    """Exact rational written as a string such as "2/3" or "-1"."""

    default_error_messages = {
        'invalid': 'A valid exact rational is required.',
        'inexact': 'Floating point numbers are not exact; use a string.',
    }

    def to_internal_value(self, data):
        if isinstance(data, bool):
            self.fail('invalid')
        if isinstance(data, float):
            self.fail('inexact')
        try:
            return Fraction(str(data).strip())
        except (ValueError, ZeroDivisionError):
            self.fail('invalid')

    def to_representation(self, value):
        return str(Fraction(value))


class RaySerializer(serializers.Serializer):
    """Serializer for one labelled ray."""

    label = serializers.CharField(max_length=64)
    vector = serializers.ListField(child=RationalField(), allow_empty=False)
    synthetic = serializers.BooleanField(default=False)


class OptionsSerializer(serializers.Serializer):
    """Serializer for scenario processing options."""

    complete = serializers.BooleanField(default=True)
    derive_contexts = serializers.BooleanField(default=False)


class ScenarioDocumentSerializer(serializers.Serializer):
    """Serializer for a scenario document."""

    dimension = serializers.IntegerField(min_value=1)
    rays = RaySerializer(many=True, allow_empty=False)
    contexts = serializers.ListField(
        child=serializers.ListField(
            child=serializers.CharField(), allow_empty=False
        ),
        required=False,
        allow_empty=False,
    )
    completion_labels = serializers.ListField(
        child=serializers.CharField(), required=False
    )
    options = OptionsSerializer(required=False)

    def validate_rays(self, rays):
        """Labels must be unique."""
        labels = [ray['label'] for ray in rays]
        duplicated = sorted({x for x in labels if labels.count(x) > 1})
        if duplicated:
            raise serializers.ValidationError(
                f"Duplicate ray labels: {', '.join(duplicated)}."
            )
        return rays

    def validate(self, attrs):
        """Vectors must match the dimension, context labels must resolve."""
        errors = {}
        dimension = attrs['dimension']
        for index, ray in enumerate(attrs['rays']):
            if len(ray['vector']) != dimension:
                errors[f"rays[{index}].vector"] = (
                    f"Expected {dimension} coordinates, "
                    f"got {len(ray['vector'])}."
                )
        labels = {ray['label'] for ray in attrs['rays']}
        for index, context in enumerate(attrs.get('contexts', [])):
            unknown = [x for x in context if x not in labels]
            if unknown:
                errors[f"contexts[{index}]"] = (
                    f"Unknown ray labels: {', '.join(unknown)}."
                )
        if errors:
            raise serializers.ValidationError(errors)
        return attrs


def parse_document(raw):
    """Parse and validate a scenario document from JSON bytes."""
    data = JSONParser().parse(io.BytesIO(raw))
    serializer = ScenarioDocumentSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.validated_data


def render(data):
    """Render serializer data as indented, newline terminated JSON."""
    return JSONRenderer().render(data, renderer_context={'indent': 2}) + b"\n"


def render_document(document):
    """Render a scenario document as JSON bytes."""
    return render(ScenarioDocumentSerializer(document).data)


def document_options(document):
    options = {'complete': True, 'derive_contexts': False}
    options.update(document.get('options') or {})
    return options


def document_to_scenario(document):
    """Build the scenario a validated document describes."""
    specs = [
        (ray['label'], ray['vector'], ray['synthetic'])
        for ray in document['rays']
    ]
    scenario = build_scenario(
        document['dimension'],
        specs,
        document.get('contexts'),
        completion_labels=document.get('completion_labels', ()),
    )
    if (
        scenario.origin == Origin.EXPLICIT
        and document_options(document)['derive_contexts']
    ):
        log_derived_comparison(scenario)
    return scenario


def log_derived_comparison(scenario):
    """Log how explicit contexts differ from the derived maximal cliques."""
    missing, extra = compare_with_derived(scenario)
    if not missing and not extra:
        logger.info("Explicit contexts equal the maximal orthogonal cliques")
        return
    for ids in missing:
        logger.info(
            "Maximal clique %s is not a context",
            [scenario.rays[r].label for r in ids],
        )
    for ids in extra:
        logger.info(
            "Context %s is not a maximal clique",
            [scenario.rays[r].label for r in ids],
        )


def scenario_to_document(scenario, options=None):
    """Describe a scenario as a document."""
    document = {
        'dimension': scenario.dimension,
        'rays': [
            {
                'label': ray.label,
                'vector': list(ray.given_coords),
                'synthetic': ray.synthetic,
            }
            for ray in scenario.rays
        ],
        'contexts': [
            scenario.context_labels(context) for context in scenario.contexts
        ],
        'options': options or {'complete': True, 'derive_contexts': False},
    }
    if scenario.completion_labels:
        document['completion_labels'] = list(scenario.completion_labels)
    return document
