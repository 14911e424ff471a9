"""
Django management command running a verification suite on one polytope or a seeded corpus.
"""
import logging
from typing import Any, List, Tuple
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from lattice.choices import Suite
from lattice.cli import (HANDLED, RunConfig, add_source_arguments, command_error, emit, load_polytope, render,
                         verify_document)
from lattice.models import VerificationRun
from lattice.polytope import VPolytope
from lattice.suites import corpus, run_suite
from lattice.tasks import dispatch_verification

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Check the bounds of a suite on a polytope or a random corpus; exit 2 on any theorem violation'

    def add_arguments(self, parser: Any) -> None:
        parser.add_argument('--suite', required=True, choices=Suite.values, help='Suite to run')
        add_source_arguments(parser, allow_random=True)
        parser.add_argument('--symmetric', action='store_true', help='Draw centrally symmetric random polytopes')
        parser.add_argument('--store', action='store_true', help='Persist the finished run in the database')
        parser.add_argument('--async', action='store_true', help='Run the sweep asynchronously using Celery')

    def handle(self, *args: Any, **options: Any) -> None:
        config = RunConfig.from_options('verify', options)
        suite = Suite(options['suite'])
        rel_tol = settings.EHRHART_REL_TOLERANCE
        precision = settings.EHRHART_MP_PRECISION
        try:
            config.validate(allow_random=True)
            members = self._members(config, suite, options['symmetric'])
            if options['async']:
                run = self._create_run(config, suite, len(members))
                result = dispatch_verification(run, members, rel_tol, precision)
                self.stdout.write(self.style.SUCCESS(
                    f'Verification of {len(members)} polytopes queued as run {run.pk} with ID: {result.id}'
                ))
                return
            logger.info(f"Starting {suite} verification of {len(members)} polytopes")
            reports = [run_suite(suite, polytope, label, polytope_id, rel_tol, precision)
                       for polytope_id, label, polytope in members]
            document = verify_document(str(suite), reports)
            if options['store']:
                self._create_run(config, suite, len(members)).record_reports(reports)
            emit(self.stdout, render('verify', document, config.fmt), config.out)
        except HANDLED as exc:
            raise command_error(exc)
        logger.info(f"Verification completed: {len(reports)} polytopes checked, {document['violated']} violated")
        if not document['clean']:
            raise CommandError(f"{document['violated']} theorem violations in suite {suite}", returncode=2)

    def _members(self, config: RunConfig, suite: Suite, symmetric: bool) -> List[Tuple[int, str, VPolytope]]:
        if config.random is None:
            label, polytope = load_polytope(config)
            return [(0, label, polytope)]
        assert config.dim is not None and config.seed is not None
        members = corpus(suite, config.dim, config.box, config.corpus_points, config.random, config.seed,
                         symmetric, settings.EHRHART_RANDOM_RETRIES)
        return [(i, f'random#{i}', polytope) for i, polytope in members]

    def _create_run(self, config: RunConfig, suite: Suite, size: int) -> VerificationRun:
        return VerificationRun.objects.create(
            suite=suite,
            seed=config.seed,
            dim=config.dim,
            box=config.box if config.random is not None else None,
            corpus_size=size,
            expression=config.expr or config.file or '',
        )
