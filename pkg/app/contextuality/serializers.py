"""
Serializers for analysis reports and single-state checks.
"""

from rest_framework import serializers

from contextuality.decision import Verdict
from contextuality.engine import StateVerdict
from contextuality.pairs import Situation
from scenario.serializers import RationalField

METHOD_CHOICES = ['general', 'specialized3d', 'both']


def _vector_list():
    return serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField())
    )


class PairDiagnosisSerializer(serializers.Serializer):
    """Serializer for the diagnosis of one pair of rays."""

    pair = serializers.ListField(
        child=serializers.CharField(), min_length=2, max_length=2
    )
    situation = serializers.ChoiceField(choices=[s.value for s in Situation])
    excluded = serializers.BooleanField()
    line = serializers.ListField(child=serializers.IntegerField())
    witness_index = serializers.IntegerField(allow_null=True)
    shortcut_ray = serializers.CharField(allow_null=True)
    shortcut_index = serializers.IntegerField(allow_null=True)
    shortcut_disagrees = serializers.BooleanField()
    explanation = serializers.CharField(allow_blank=True)


class ReportSerializer(serializers.Serializer):
    """Serializer for the report of a decision run."""

    verdict = serializers.ChoiceField(choices=[v.value for v in Verdict])
    method = serializers.ChoiceField(choices=METHOD_CHOICES)
    methods_agree = serializers.BooleanField(required=False)
    assignment_count = serializers.IntegerField(min_value=0)
    assignments = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField()),
        required=False,
    )
    witnesses = _vector_list()
    witness_subspaces = serializers.ListField(child=_vector_list())
    all_ones = _vector_list()
    diagnostics = PairDiagnosisSerializer(many=True, required=False)
    timings = serializers.DictField(
        child=serializers.FloatField(), required=False
    )

    def validate(self, attrs):
        """Assignment rows and witness subspaces agree with the verdict."""
        rows = attrs.get('assignments')
        if rows is not None and len(rows) != attrs['assignment_count']:
            raise serializers.ValidationError(
                {'assignments': 'The number of rows must equal '
                                'assignment_count.'}
            )
        witnessed = attrs['verdict'] == Verdict.WITNESS_STATES.value
        if witnessed != bool(attrs['witness_subspaces']):
            raise serializers.ValidationError(
                {'witness_subspaces': 'Witness subspaces are listed only '
                                      'for WitnessStates.'}
            )
        return attrs


class ContextProbabilitiesSerializer(serializers.Serializer):
    """Serializer for one row of an empirical model."""

    context = serializers.ListField(child=serializers.CharField())
    probabilities = serializers.ListField(child=RationalField())

    def validate(self, attrs):
        if len(attrs['probabilities']) != len(attrs['context']):
            raise serializers.ValidationError(
                {'probabilities': 'One probability per context ray.'}
            )
        if sum(attrs['probabilities']) != 1:
            raise serializers.ValidationError(
                {'probabilities': 'Probabilities must sum to 1.'}
            )
        return attrs


class StateCheckSerializer(serializers.Serializer):
    """Serializer for the result of checking one state."""

    state = serializers.ListField(child=RationalField())
    verdict = serializers.ChoiceField(
        choices=[v.value for v in StateVerdict]
    )
    witness_index = serializers.IntegerField(allow_null=True)
    witness_ones = serializers.ListField(
        child=serializers.CharField(), allow_null=True
    )
    empirical_model = ContextProbabilitiesSerializer(many=True)

    def validate(self, attrs):
        """A witness is given exactly when the state is not contextual."""
        contextual = (
            attrs['verdict'] == StateVerdict.STRONGLY_CONTEXTUAL.value
        )
        if contextual != (attrs['witness_index'] is None):
            raise serializers.ValidationError(
                {'witness_index': 'A witness assignment belongs to '
                                  'NotStronglyContextual only.'}
            )
        return attrs


def diagnosis_document(scenario, diagnosis):
    rays = scenario.rays
    return {
        'pair': [rays[r].label for r in diagnosis.pair],
        'situation': diagnosis.situation.value,
        'excluded': diagnosis.excluded,
        'line': list(diagnosis.line.coords),
        'witness_index': diagnosis.witness_index,
        'shortcut_ray': (
            None
            if diagnosis.shortcut_ray is None
            else rays[diagnosis.shortcut_ray].label
        ),
        'shortcut_index': diagnosis.shortcut_index,
        'shortcut_disagrees': diagnosis.shortcut_disagrees,
        'explanation': diagnosis.explanation,
    }


def report_document(
    scenario,
    report,
    method=None,
    diagnostics=None,
    assignments=None,
    timings=None,
    methods_agree=None,
):
    """Describe an AnalysisReport as a report document."""
    if diagnostics is None:
        diagnostics = report.diagnostics
    document = {
        'verdict': report.verdict.value,
        'method': method or report.method.value,
        'assignment_count': report.assignment_count,
        'witnesses': [list(w.coords) for w in report.witnesses],
        'witness_subspaces': [
            [list(v.coords) for v in s.basis]
            for s in report.witness_subspaces
        ],
        'all_ones': [list(u.coords) for u in report.all_ones],
        'diagnostics': [diagnosis_document(scenario, d) for d in diagnostics],
    }
    if methods_agree is not None:
        document['methods_agree'] = methods_agree
    if assignments is not None:
        document['assignments'] = [list(a.values) for a in assignments]
    if timings is not None:
        document['timings'] = dict(timings)
    return document


def state_check_document(scenario, state, check, model):
    """Describe a check_state result and its empirical model."""
    witness_ones = None
    if check.witness is not None:
        witness_ones = [
            scenario.rays[r].label for r in sorted(check.witness.ones)
        ]
    return {
        'state': list(state),
        'verdict': check.verdict.value,
        'witness_index': check.witness_index,
        'witness_ones': witness_ones,
        'empirical_model': [
            {
                'context': scenario.context_labels(context),
                'probabilities': list(row),
            }
            for context, row in zip(model.contexts, model.rows)
        ],
    }
