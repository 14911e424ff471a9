"""
Django management command counting the lattice points of a dilate kP.
"""
from typing import Any
from django.core.management.base import BaseCommand

from lattice.cli import (HANDLED, RunConfig, add_source_arguments, command_error, count_document, emit,
                         load_polytope, render)
from lattice.exceptions import ExpressionError


class Command(BaseCommand):
    help = 'Count the lattice points of kP (or of its interior with --strict)'

    def add_arguments(self, parser: Any) -> None:
        add_source_arguments(parser)
        parser.add_argument('--k', type=int, default=1, help='Dilation factor (default: 1)')
        parser.add_argument('--strict', action='store_true', help='Count interior points only')

    def handle(self, *args: Any, **options: Any) -> None:
        config = RunConfig.from_options('count', options)
        try:
            config.validate()
            if options['k'] < 0:
                raise ExpressionError(f"--k must be nonnegative, got {options['k']}")
            label, polytope = load_polytope(config)
            document = count_document(label, polytope, options['k'], options['strict'])
            emit(self.stdout, render('count', document, config.fmt), config.out)
        except HANDLED as exc:
            raise command_error(exc)
