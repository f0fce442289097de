"""
Shared plumbing for the scenario management commands.
"""

import logging
import sys
from pathlib import Path

from django.core.management.base import (
    BaseCommand,
    CommandError,
    CommandParser,
)
from rest_framework.exceptions import ParseError
from rest_framework.serializers import ValidationError

from core.exceptions import ContextualityError, InvariantViolation
from scenario.domain import complete_contexts
from scenario.fixtures import load_fixture
from scenario.serializers import (
    document_options,
    document_to_scenario,
    log_derived_comparison,
    parse_document,
)

logger = logging.getLogger(__name__)

FORMATS = ['table', 'structured']


def flatten_errors(detail, path=""):
    """Turn nested serializer errors into "field.path: message" lines."""
    if isinstance(detail, dict):
        lines = []
        for key, value in detail.items():
            if key == 'non_field_errors':
                child = path
            elif isinstance(key, int):
                child = f"{path}[{key}]"
            else:
                child = f"{path}.{key}" if path else str(key)
            lines += flatten_errors(value, child)
        return lines
    if isinstance(detail, list):
        if all(not isinstance(item, (dict, list)) for item in detail):
            prefix = f"{path}: " if path else ""
            return [f"{prefix}{item}" for item in detail]
        lines = []
        for index, item in enumerate(detail):
            if item:
                lines += flatten_errors(item, f"{path}[{index}]")
        return lines
    prefix = f"{path}: " if path else ""
    return [f"{prefix}{detail}"]


class UsageParser(CommandParser):
    """Command parser whose usage errors exit with status 1.

    Status 2 is left to internal invariant violations.
    """

    def error(self, message):
        if self.called_from_command_line:
            self.print_usage(sys.stderr)
            self.exit(1, f"{self.prog}: error: {message}\n")
        raise CommandError(f"Error: {message}", returncode=1)


class ScenarioCommand(BaseCommand):
    """Base class for commands that read one scenario."""

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        # Adds no state, only the error() override.
        parser.__class__ = UsageParser
        return parser

    def add_arguments(self, parser):
        parser.add_argument(
            'input', nargs='?', help='Scenario document (JSON).'
        )
        parser.add_argument('--fixture', help='Built-in scenario name.')
        parser.add_argument('--format', choices=FORMATS, default='table')
        parser.add_argument('--output', help='Write the result here.')

    def load_scenario(self, options, complete=True):
        """Load the fixture or document named in options.

        Deficient contexts are completed when the document asks for it
        (the default) and complete is set.
        """
        if bool(options.get('fixture')) == bool(options.get('input')):
            raise CommandError(
                'Give either an input document or --fixture.', returncode=1
            )
        if options.get('fixture'):
            scenario = load_fixture(options['fixture'])
            log_derived_comparison(scenario)
            wants_completion = True
        else:
            raw = Path(options['input']).read_bytes()
            document = parse_document(raw)
            scenario = document_to_scenario(document)
            wants_completion = document_options(document)['complete']
        if complete and wants_completion:
            scenario = complete_contexts(scenario)
        return scenario

    def emit(self, text, options):
        """Write text to --output or to stdout."""
        if options.get('output'):
            Path(options['output']).write_text(text)
            logger.info("Wrote %s", options['output'])
        else:
            self.stdout.write(text, ending="")

    def run(self, *args, **options):
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            self.run(*args, **options)
        except InvariantViolation as exc:
            raise CommandError(
                f"Internal check failed: {exc}", returncode=2
            ) from exc
        except ValidationError as exc:
            message = "\n".join(flatten_errors(exc.detail))
            raise CommandError(
                f"Invalid document:\n{message}", returncode=1
            ) from exc
        except ParseError as exc:
            raise CommandError(str(exc.detail), returncode=1) from exc
        except (ContextualityError, OSError) as exc:
            raise CommandError(str(exc), returncode=1) from exc
