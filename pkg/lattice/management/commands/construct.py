"""
Django management command building a polytope from a construction expression.
"""
from typing import Any
from django.core.management.base import BaseCommand

from lattice.cli import (HANDLED, RunConfig, add_source_arguments, command_error, construct_document, emit,
                         load_polytope, render)
from lattice.exceptions import ExpressionError


class Command(BaseCommand):
    help = 'Build a construction expression and print its generators, vertices and facets'

    def add_arguments(self, parser: Any) -> None:
        add_source_arguments(parser)

    def handle(self, *args: Any, **options: Any) -> None:
        config = RunConfig.from_options('construct', options)
        try:
            config.validate()
            if config.expr is None:
                raise ExpressionError("construct takes --expr only")
            label, polytope = load_polytope(config)
            document = construct_document(label, polytope)
            emit(self.stdout, render('construct', document, config.fmt), config.out)
        except HANDLED as exc:
            raise command_error(exc)
