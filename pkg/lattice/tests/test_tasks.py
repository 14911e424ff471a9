import pytest

from lattice.models import VerificationRun
from lattice.polytope import CrossPolytope, StdSimplex, T, build
from lattice.tasks import dispatch_verification, merge_verification, verify_polytope

from .factories import VerificationRunFactory


@pytest.mark.tasks
class TestVerifyPolytope:
    def test_ok(self):
        result = verify_polytope.apply(args=('thm11', build(T(2, 3)).to_json(), 'T(2,3)', 4, 1e-9, 120)).get()
        assert result['status'] == 'ok'
        assert result['id'] == 4
        assert result['report']['polytope'] == 'T(2,3)'

    def test_library_errors_become_error_results(self):
        malformed = {'dim': 2, 'generators': [[0, 0], [1, 1]]}
        result = verify_polytope.apply(args=('thm11', malformed, 'flat', 2, 1e-9, 120)).get()
        assert result['status'] == 'error'
        assert result['id'] == 2
        assert 'affine dimension' in result['message']


@pytest.mark.tasks
@pytest.mark.django_db
class TestMergeVerification:
    def test_records_reports_in_id_order(self):
        run = VerificationRunFactory(suite='hibi')
        results = [
            verify_polytope.apply(args=('hibi', build(expr).to_json(), label, i, 1e-9, 120)).get()
            for i, label, expr in [(1, 'T(2,3)', T(2, 3)), (0, 'simplex(3)', StdSimplex(3))]
        ]
        summary = merge_verification.apply(args=(results, run.pk)).get()
        run.refresh_from_db()
        assert summary == {'status': 'holds', 'verified_count': 2, 'violated_count': 0}
        assert [r['id'] for r in run.report] == [0, 1]
        assert run.is_clean()

    def test_errors_fail_the_run(self):
        run = VerificationRunFactory()
        results = [{'status': 'error', 'id': 3, 'message': 'boom'}, {'status': 'ok', 'id': 0, 'report': {}}]
        summary = merge_verification.apply(args=(results, run.pk)).get()
        run.refresh_from_db()
        assert summary['status'] == 'error'
        assert run.status == VerificationRun.Status.FAILED
        assert run.error == '#3: boom'


@pytest.mark.tasks
@pytest.mark.celery
@pytest.mark.django_db
class TestDispatch:
    def test_chord_merges_into_run(self, eager_celery):
        run = VerificationRunFactory(suite='iso-cross', corpus_size=2)
        members = [(0, 'cross(2)', build(CrossPolytope(2))), (1, 'cross(3)', build(CrossPolytope(3)))]
        dispatch_verification(run, members, 1e-9, 120)
        run.refresh_from_db()
        assert run.status == VerificationRun.Status.HOLDS
        assert [r['verdict'] for r in run.report] == ['equality', 'equality']
