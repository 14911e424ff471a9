"""
Pytest configuration and fixtures for lattice testing.
"""

import pytest
from lattice.polytope import Join, S, T, UnitCube, VPolytope, build

from .factories import VerificationRunFactory


@pytest.fixture
def verification_run(db):
    """A pending thm11 run over a random corpus."""
    return VerificationRunFactory()


@pytest.fixture
def unit_square() -> VPolytope:
    """[0,1]^2."""
    return build(UnitCube(2))


@pytest.fixture
def hibi_counterexample() -> VPolytope:
    """Join of T(2,3) and S(3,1): h* = (1,2,1,2,0,0) without interior points."""
    return build(Join(T(2, 3), S(3, 1)))


@pytest.fixture
def lopsided_triangle() -> VPolytope:
    """A non-symmetric lattice triangle with one interior point."""
    return VPolytope.from_points([(0, 0), (2, 1), (0, 2)])


@pytest.fixture
def polytope_file(tmp_path):
    """The unit square written as a polytope JSON document."""
    path = tmp_path / 'square.json'
    path.write_text('{"dim": 2, "generators": [[0, 0], [1, 0], [0, 1], [1, 1]]}', encoding='utf-8')
    return path


@pytest.fixture
def eager_celery(settings):
    """Run Celery tasks in-process for the duration of a test."""
    from ehrhart_lab.celery import app

    previous = (app.conf.task_always_eager, app.conf.task_eager_propagates)
    app.conf.task_always_eager = True
    app.conf.task_eager_propagates = True
    settings.CELERY_TASK_ALWAYS_EAGER = True
    yield app
    app.conf.task_always_eager, app.conf.task_eager_propagates = previous
