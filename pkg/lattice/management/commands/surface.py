"""
Django management command printing exact Euclidean and lattice surface areas.
"""
from typing import Any
from django.conf import settings
from django.core.management.base import BaseCommand

from lattice.cli import (HANDLED, RunConfig, add_source_arguments, command_error, emit, load_polytope, render,
                         surface_document)


class Command(BaseCommand):
    help = 'Compute F(P) as an exact sum of square roots, g_(d-1), and the per-facet areas'

    def add_arguments(self, parser: Any) -> None:
        add_source_arguments(parser)

    def handle(self, *args: Any, **options: Any) -> None:
        config = RunConfig.from_options('surface', options)
        try:
            config.validate()
            label, polytope = load_polytope(config)
            document = surface_document(label, polytope, settings.EHRHART_MP_PRECISION)
            emit(self.stdout, render('surface', document, config.fmt), config.out)
        except HANDLED as exc:
            raise command_error(exc)
