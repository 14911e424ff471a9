"""
Celery tasks for corpus verification sweeps.
"""

import logging
from typing import Any, Dict, List, Sequence, Tuple
from celery import chord, shared_task

from .exceptions import LatticeError
from .models import VerificationRun
from .polytope import VPolytope
from .suites import run_suite

logger = logging.getLogger(__name__)


@shared_task(bind=True)
def verify_polytope(self: Any, suite: str, polytope: Dict[str, Any], label: str, polytope_id: int,
                    rel_tol: float, precision: int) -> Dict[str, Any]:
    try:
        report = run_suite(suite, VPolytope.from_json(polytope), label, polytope_id, rel_tol, precision)
    except LatticeError as exc:
        logger.error(f"Verification of {label} ({suite}) failed: {exc}")
        return {'status': 'error', 'id': polytope_id, 'message': str(exc)}
    return {'status': 'ok', 'id': polytope_id, 'report': report.to_json()}


@shared_task(bind=True)
def merge_verification(self: Any, results: List[Dict[str, Any]], run_id: int) -> Dict[str, Any]:
    logger.info(f"Starting merge of {len(results)} results into run {run_id}")
    run = VerificationRun.objects.get(pk=run_id)
    errors = [r for r in results if r.get('status') != 'ok']
    if errors:
        message = '; '.join(f"#{r.get('id')}: {r.get('message')}" for r in sorted(errors, key=lambda r: r.get('id', 0)))
        run.mark_failed(message)
        logger.error(f"Run {run_id} failed: {len(errors)} polytopes errored")
        return {'status': 'error', 'message': message}
    run.record_documents(r['report'] for r in results)
    logger.info(f"Merge completed: {len(results)} polytopes verified, {run.violated_count} violated")
    return {'status': run.status, 'verified_count': len(results), 'violated_count': run.violated_count}


def dispatch_verification(run: VerificationRun, members: Sequence[Tuple[int, str, VPolytope]],
                          rel_tol: float, precision: int) -> Any:
    """One verify_polytope task per member, merged into ``run`` once all have finished."""
    header = [
        verify_polytope.s(run.suite, polytope.to_json(), label, polytope_id, rel_tol, precision)
        for polytope_id, label, polytope in members
    ]
    logger.info(f"Dispatching {len(header)} {run.suite} verifications for run {run.pk}")
    return chord(header)(merge_verification.s(run.pk))
