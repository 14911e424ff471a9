"""
Django management command emitting a lattice polytope with h*-vector (1, a1, a2).
"""
from typing import Any
from django.core.management.base import BaseCommand

from lattice.bounds import degree2_witness
from lattice.cli import FORMATS, HANDLED, command_error, emit, render, witness_document


class Command(BaseCommand):
    help = 'Construct and brute-force verify a polytope realizing the degree-2 h*-vector (1, a1, a2)'

    def add_arguments(self, parser: Any) -> None:
        parser.add_argument('--a1', type=int, required=True)
        parser.add_argument('--a2', type=int, required=True)
        parser.add_argument('--out', help='Write the document to PATH instead of stdout')
        parser.add_argument('--format', choices=FORMATS, default='json', help='Output format (default: json)')

    def handle(self, *args: Any, **options: Any) -> None:
        a1, a2 = options['a1'], options['a2']
        try:
            document = witness_document(a1, a2, degree2_witness(a1, a2))
            emit(self.stdout, render('witness', document, options['format']), options['out'])
        except HANDLED as exc:
            raise command_error(exc)
