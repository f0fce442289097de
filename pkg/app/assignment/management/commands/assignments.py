from assignment.enumeration import enumerate_assignments
from assignment.serializers import (
    AssignmentTableSerializer,
    assignment_table,
)
from assignment.tables import render_assignment_table
from core.management.base import ScenarioCommand
from scenario.serializers import render


class Command(ScenarioCommand):
    """Django command to list every global assignment of a scenario."""

    help = 'Enumerate the global assignments of a completed scenario.'

    def run(self, *args, **options):
        scenario = self.load_scenario(options)
        assignments = enumerate_assignments(scenario)
        data = AssignmentTableSerializer(
            assignment_table(scenario, assignments)
        ).data
        if options['format'] == 'structured':
            self.emit(render(data).decode(), options)
        else:
            self.emit(render_assignment_table(data), options)
