from core.management.base import ScenarioCommand
from scenario.serializers import (
    ScenarioDocumentSerializer,
    render,
    scenario_to_document,
)
from scenario.tables import render_scenario_table


class Command(ScenarioCommand):
    """Django command to complete the contexts of a scenario."""

    help = 'Complete every context to an orthogonal basis.'

    def run(self, *args, **options):
        scenario = self.load_scenario(options)
        data = ScenarioDocumentSerializer(scenario_to_document(scenario)).data
        if options['format'] == 'structured':
            self.emit(render(data).decode(), options)
        else:
            self.emit(render_scenario_table(data), options)
