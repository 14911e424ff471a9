"""
Django management command printing the Ehrhart polynomial and h*-vector of a polytope.
"""
from typing import Any
from django.core.management.base import BaseCommand

from lattice.cli import (HANDLED, RunConfig, add_source_arguments, command_error, emit, hstar_document,
                         load_polytope, render)


class Command(BaseCommand):
    help = 'Compute g_0..g_d, a_0..a_d, degree, volume and lattice-point counts of a polytope'

    def add_arguments(self, parser: Any) -> None:
        add_source_arguments(parser)

    def handle(self, *args: Any, **options: Any) -> None:
        config = RunConfig.from_options('hstar', options)
        try:
            config.validate()
            label, polytope = load_polytope(config)
            document = hstar_document(label, polytope)
            emit(self.stdout, render('hstar', document, config.fmt), config.out)
        except HANDLED as exc:
            raise command_error(exc)
