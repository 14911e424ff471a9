from fractions import Fraction

import pytest

from lattice.choices import Verdict
from lattice.models import VerificationRun
from lattice.results import LOWER, BoundReport, exact_entry

from .factories import VerificationRunFactory


def report(polytope_id, verdict, kind='theorem'):
    actual = Fraction(1) if verdict == Verdict.VIOLATED else Fraction(3)
    entries = (exact_entry(1, 'thm11', LOWER, Fraction(2), actual),)
    return BoundReport('thm11', f'random#{polytope_id}', entries, verdict, polytope_id, kind)


@pytest.mark.models
@pytest.mark.django_db
class TestVerificationRun:
    def test_defaults(self, verification_run):
        run = verification_run
        assert run.status == VerificationRun.Status.PENDING
        assert run.report == []
        assert not run.is_clean()

    def test_str(self):
        assert str(VerificationRunFactory(seed=42, dim=4)) == 'thm11 on random(dim=4, seed=42): pending'
        assert str(VerificationRunFactory(expression='cross(3)', suite='prop110')) == 'prop110 on cross(3): pending'

    def test_record_reports(self):
        run = VerificationRunFactory()
        run.record_reports([report(2, Verdict.HOLDS), report(0, Verdict.VIOLATED), report(1, Verdict.HOLDS)])
        run.refresh_from_db()
        assert run.status == VerificationRun.Status.VIOLATED
        assert run.violated_count == 1
        assert [r['id'] for r in run.report] == [0, 1, 2]
        assert not run.is_clean()

    def test_probes_never_count_as_violations(self):
        run = VerificationRunFactory(suite='pair-probe')
        run.record_reports([report(0, Verdict.VIOLATED, kind='probe')])
        assert run.status == VerificationRun.Status.HOLDS
        assert run.is_clean()

    def test_record_documents_matches_record_reports(self):
        reports = [report(1, Verdict.VIOLATED), report(0, Verdict.HOLDS)]
        direct, rendered = VerificationRunFactory(), VerificationRunFactory()
        direct.record_reports(reports)
        rendered.record_documents(r.to_json() for r in reports)
        assert (direct.status, direct.violated_count, direct.report) == \
            (rendered.status, rendered.violated_count, rendered.report)

    def test_mark_failed(self, verification_run):
        run = verification_run
        run.mark_failed('worker lost')
        run.refresh_from_db()
        assert run.status == VerificationRun.Status.FAILED
        assert run.error == 'worker lost'
