from rest_framework import serializers

from assignment.enumeration import enumerate_assignments
from contextuality.engine import check_state, empirical_model
from contextuality.serializers import (
    StateCheckSerializer,
    state_check_document,
)
from contextuality.tables import render_state_check
from core.management.base import ScenarioCommand
from scenario.serializers import RationalField, render


def parse_state(text):
    """Parse comma separated exact rationals such as "1,-1/2,0"."""
    field = serializers.ListField(child=RationalField(), allow_empty=False)
    values = [part.strip() for part in text.split(',')]
    try:
        return field.run_validation(values)
    except serializers.ValidationError as exc:
        raise serializers.ValidationError({'state': exc.detail}) from None


class Command(ScenarioCommand):
    """Django command to test one real state for strong contextuality."""

    help = (
        'Print the empirical model of a state and whether it is '
        'strongly contextual.'
    )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--state',
            required=True,
            help='Comma separated exact rationals, one per dimension.',
        )

    def run(self, *args, **options):
        state = parse_state(options['state'])
        scenario = self.load_scenario(options)
        assignments = enumerate_assignments(scenario)
        check = check_state(scenario, assignments, state)
        model = empirical_model(scenario, state)
        data = StateCheckSerializer(
            state_check_document(scenario, state, check, model)
        ).data
        if options['format'] == 'structured':
            self.emit(render(data).decode(), options)
        else:
            self.emit(render_state_check(data, scenario.dimension), options)
