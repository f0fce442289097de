import logging
import time

from django.core.management.base import CommandError

from assignment.enumeration import enumerate_assignments
from contextuality.decision import decide_3d, decide_general
from contextuality.serializers import ReportSerializer, report_document
from contextuality.tables import render_report
from core.exceptions import InvariantViolation
from core.management.base import ScenarioCommand
from scenario.serializers import render

logger = logging.getLogger(__name__)

METHODS = ['general', '3d', 'both']


def _timed(timings, name, func, *args):
    start = time.perf_counter()
    result = func(*args)
    timings[name] = time.perf_counter() - start
    logger.info("%s took %.4f s", name, timings[name])
    return result


class Command(ScenarioCommand):
    """Django command to decide whether any state is strongly contextual."""

    help = 'Run the decision engines on a scenario and print the report.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--method', choices=METHODS, default='both')
        parser.add_argument(
            '--assignments',
            action='store_true',
            help='Include the full assignment table in the report.',
        )
        parser.add_argument(
            '--timings',
            action='store_true',
            help='Include wall-clock timings in the report.',
        )

    def run(self, *args, **options):
        scenario = self.load_scenario(options)
        method = options['method']
        if method == '3d' and scenario.dimension != 3:
            raise CommandError(
                f"--method 3d needs a three dimensional scenario, this one "
                f"has d = {scenario.dimension}.",
                returncode=1,
            )
        if method == 'both' and scenario.dimension != 3:
            logger.warning(
                "d = %d: running the general engine only",
                scenario.dimension,
            )
            method = 'general'

        timings = {}
        assignments = _timed(
            timings, 'enumeration', enumerate_assignments, scenario
        )
        reports = {}
        if method in ('general', 'both'):
            reports['general'] = _timed(
                timings, 'general', decide_general, scenario, assignments
            )
        if method in ('3d', 'both'):
            reports['3d'] = _timed(
                timings, '3d', decide_3d, scenario, assignments
            )

        methods_agree = None
        if len(reports) == 2:
            general, special = reports['general'], reports['3d']
            methods_agree = (
                general.verdict == special.verdict
                and [s.key for s in general.witness_subspaces]
                == [s.key for s in special.witness_subspaces]
            )
            if not methods_agree:
                raise InvariantViolation(
                    f"The engines disagree: general says "
                    f"{general.verdict.value}, the pairwise procedure says "
                    f"{special.verdict.value}."
                )
        report = reports.get('general') or reports['3d']
        diagnostics = reports['3d'].diagnostics if '3d' in reports else ()

        document = report_document(
            scenario,
            report,
            method='both' if len(reports) == 2 else report.method.value,
            diagnostics=diagnostics,
            assignments=assignments if options['assignments'] else None,
            timings=timings if options['timings'] else None,
            methods_agree=methods_agree,
        )
        data = ReportSerializer(document).data
        if options['format'] == 'structured':
            self.emit(render(data).decode(), options)
        else:
            self.emit(render_report(data), options)
