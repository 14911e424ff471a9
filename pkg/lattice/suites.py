"""
Verification suites: one polytope in, one BoundReport out. Shared by the verify
command (in-process) and the Celery workers.
"""

import logging
from random import Random
from typing import Callable, Dict, List, Tuple

from .bounds import (hibi_check, specialized_bound_report, stanley_symmetric_check, surface_bound_report,
                     symmetric_pair_probe, treutlein_report, upper_bound_report, volume_bound_report)
from .choices import Suite, Verdict
from .ehrhart import count, ehrhart_poly, hstar_from_counts
from .exceptions import DegeneratePolytopeError, InvariantViolation
from .polytope import (Dilate, Explicit, Join, Prism, Pyramid, S, VPolytope, cross_generators,
                       is_centrally_symmetric, random_corpus, random_cross_generators)
from .results import BoundEntry, BoundReport, not_applicable
from .series import compare_transform
from .surface import DEFAULT_PRECISION, DEFAULT_REL_TOLERANCE, iso_ratio_check, lattice_surface, surface_minimum_check

logger = logging.getLogger(__name__)

SYMMETRIC_SUITES = frozenset({Suite.STANLEY_SYMMETRIC, Suite.PAIR_PROBE})
# Brute-force oracles of the series suite stay at or below this dimension
SERIES_MAX_DIM = 5


def _volume(p: VPolytope, **_: float) -> BoundReport:
    if p.dim < 3:
        return not_applicable(Suite.VOLUME_LOWER, 'needs d >= 3')
    return volume_bound_report(ehrhart_poly(p), count(p, 1))


def _specialized(p: VPolytope, **_: float) -> BoundReport:
    if p.dim < 3:
        return not_applicable(Suite.SPECIALIZED_LOWER, 'needs d >= 3')
    return specialized_bound_report(ehrhart_poly(p))


def _upper(p: VPolytope, **_: float) -> BoundReport:
    if p.dim < 2:
        return not_applicable(Suite.UPPER, 'needs d >= 2')
    return upper_bound_report(ehrhart_poly(p))


def _surface_trivial(p: VPolytope, **_: float) -> BoundReport:
    poly = ehrhart_poly(p)
    surface = lattice_surface(p)
    if surface != poly.g(p.dim - 1):
        raise InvariantViolation(f"lattice surface {surface} != g_(d-1) = {poly.g(p.dim - 1)}")
    return surface_bound_report(poly)


def _hibi(p: VPolytope, **_: float) -> BoundReport:
    return hibi_check(hstar_from_counts(p))


def _stanley(p: VPolytope, **_: float) -> BoundReport:
    if not is_centrally_symmetric(p):
        return not_applicable(Suite.STANLEY_SYMMETRIC, 'polytope is not centrally symmetric')
    return stanley_symmetric_check(p)


def _treutlein(p: VPolytope, **_: float) -> BoundReport:
    return treutlein_report(hstar_from_counts(p))


def _surface_minimum(p: VPolytope, rel_tol: float = DEFAULT_REL_TOLERANCE,
                     precision: int = DEFAULT_PRECISION, **_: float) -> BoundReport:
    return surface_minimum_check(p, rel_tol, precision)


def _iso_cross(p: VPolytope, rel_tol: float = DEFAULT_REL_TOLERANCE,
               precision: int = DEFAULT_PRECISION, **_: float) -> BoundReport:
    try:
        generators = cross_generators(p)
    except DegeneratePolytopeError as exc:
        return not_applicable(Suite.ISO_CROSS, str(exc))
    return iso_ratio_check(generators, rel_tol, precision)


def _series(p: VPolytope, **_: float) -> BoundReport:
    base = Explicit(p)
    candidates = [Pyramid(base), Dilate(base, 2), Prism(base, 1), Join(base, S(1, 1))]
    entries = []
    for n, expr in enumerate(e for e in candidates if e.dim <= SERIES_MAX_DIM):
        report = compare_transform(expr)
        verdict = Verdict.EQUALITY if report.agree else Verdict.VIOLATED
        entries.append(BoundEntry(n, report.transform, 'equal', list(report.output.coeffs),
                                  list(report.oracle.coeffs), verdict))
    if not entries:
        return not_applicable(Suite.SERIES, f'transforms exceed dimension {SERIES_MAX_DIM}')
    verdict = Verdict.VIOLATED if any(e.verdict == Verdict.VIOLATED for e in entries) else Verdict.HOLDS
    return BoundReport(Suite.SERIES, '', tuple(entries), verdict)


def _pair_probe(p: VPolytope, **_: float) -> BoundReport:
    return symmetric_pair_probe(hstar_from_counts(p), symmetric=is_centrally_symmetric(p))


RUNNERS: Dict[str, Callable[..., BoundReport]] = {
    Suite.VOLUME_LOWER: _volume,
    Suite.SPECIALIZED_LOWER: _specialized,
    Suite.UPPER: _upper,
    Suite.HIBI: _hibi,
    Suite.STANLEY_SYMMETRIC: _stanley,
    Suite.TREUTLEIN: _treutlein,
    Suite.SURFACE_MINIMUM: _surface_minimum,
    Suite.ISO_CROSS: _iso_cross,
    Suite.SURFACE_TRIVIAL: _surface_trivial,
    Suite.SERIES: _series,
    Suite.PAIR_PROBE: _pair_probe,
}


def run_suite(suite: str, polytope: VPolytope, label: str = '', polytope_id: int = 0,
              rel_tol: float = DEFAULT_REL_TOLERANCE, precision: int = DEFAULT_PRECISION) -> BoundReport:
    report = RUNNERS[Suite(suite)](polytope, rel_tol=rel_tol, precision=precision)
    report = report.with_source(label, polytope_id)
    if report.violated:
        logger.warning(f"{suite}: violation on {label or polytope_id}")
    return report


def corpus(suite: str, dim: int, box: int, points: int, size: int, seed: int,
           symmetric: bool = False, max_retries: int = 100) -> List[Tuple[int, VPolytope]]:
    """Seeded random members for ``suite``; cross-polytopes for iso-cross."""
    if suite == Suite.ISO_CROSS:
        rng = Random(seed)
        members = []
        for i in range(size):
            vecs = random_cross_generators(dim, box, rng.randrange(2 ** 32), max_retries)
            members.append((i, VPolytope(dim, vecs + tuple(tuple(-x for x in v) for v in vecs))))
        return members
    symmetric = symmetric or Suite(suite) in SYMMETRIC_SUITES
    return random_corpus(dim, box, points, size, seed, symmetric, max_retries)
