"""
Exact lattice and Euclidean surface areas.

Every facet with primitive normal a has Euclidean area (rational) * ||a||, and ||a||^2
is an integer, so surfaces are carried exactly as sums of rational multiples of
square roots and only compared numerically when their supports differ.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Any, Dict, Iterable, List, Sequence, Tuple

import mpmath

from .choices import Verdict
from .exact import IntVec, det_exact, dot
from .exceptions import DegeneratePolytopeError, InvariantViolation
from .polytope import HFacet, VPolytope, facet_vertices, is_centrally_symmetric, triangulate
from .reporting import rat_str
from .results import LOWER, BoundEntry, BoundReport

logger = logging.getLogger(__name__)

DEFAULT_PRECISION = 120
DEFAULT_REL_TOLERANCE = 1e-9


def _square_part(n: int) -> Tuple[int, int]:
    """n = s^2 * f with f square-free; returns (s, f)."""
    s, f, p = 1, n, 2
    while p * p <= f:
        while f % (p * p) == 0:
            f //= p * p
            s *= p
        p += 1
    return s, f


@dataclass(frozen=True)
class SqrtSum:
    """sum q_i sqrt(N_i) with distinct square-free N_i in increasing order."""

    terms: Tuple[Tuple[Fraction, int], ...] = ()

    def __post_init__(self) -> None:
        merged: Dict[int, Fraction] = {}
        for q, n in self.terms:
            if n <= 0:
                raise ValueError(f"radicand must be positive, got {n}")
            s, f = _square_part(int(n))
            merged[f] = merged.get(f, Fraction(0)) + Fraction(q) * s
        canonical = tuple((q, n) for n, q in sorted(merged.items()) if q != 0)
        if any(q < 0 for q, _ in canonical):
            raise ValueError(f"negative coefficient in {canonical}")
        object.__setattr__(self, 'terms', canonical)

    @classmethod
    def rational(cls, q: Fraction) -> 'SqrtSum':
        return cls(((Fraction(q), 1),))

    def __add__(self, other: 'SqrtSum') -> 'SqrtSum':
        return SqrtSum(self.terms + other.terms)

    def scale(self, factor: Fraction) -> 'SqrtSum':
        return SqrtSum(tuple((q * factor, n) for q, n in self.terms))

    def is_rational(self) -> bool:
        return all(n == 1 for _, n in self.terms)

    def evaluate(self, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
        with mpmath.workprec(precision):
            return mpmath.fsum(mpmath.mpf(q.numerator) / q.denominator * mpmath.sqrt(n) for q, n in self.terms)

    def to_json(self) -> List[Dict[str, Any]]:
        return [{'q': rat_str(q), 'n': n} for q, n in self.terms]

    def __str__(self) -> str:
        parts = [rat_str(q) if n == 1 else f"{rat_str(q)}*sqrt({n})" for q, n in self.terms]
        return ' + '.join(parts) or '0'


def compare(a: SqrtSum, b: SqrtSum, rel_tol: float = DEFAULT_REL_TOLERANCE,
            precision: int = DEFAULT_PRECISION) -> int:
    """-1, 0 or 1; exact when the supports coincide, numeric within ``rel_tol`` otherwise."""
    if a == b:
        return 0
    if [n for _, n in a.terms] == [n for _, n in b.terms] and len(a.terms) == 1:
        return 1 if a.terms[0][0] > b.terms[0][0] else -1
    with mpmath.workprec(precision):
        x, y = a.evaluate(precision), b.evaluate(precision)
        if abs(x - y) <= rel_tol * max(abs(x), abs(y)):
            return 0
        return 1 if x > y else -1


@dataclass(frozen=True)
class FacetArea:
    facet: HFacet
    lattice_area: Fraction
    euclid_area: SqrtSum
    k: int

    @property
    def norm_squared(self) -> int:
        return int(dot(self.facet.normal, self.facet.normal))

    def to_json(self) -> Dict[str, Any]:
        return {
            'normal': list(self.facet.normal),
            'offset': self.facet.offset,
            'k': self.k,
            'lattice_area': rat_str(self.lattice_area),
            'euclid_area': self.euclid_area.to_json(),
        }


@lru_cache(maxsize=1024)
def facet_areas(polytope: VPolytope) -> Tuple[FacetArea, ...]:
    """Fan-triangulate each facet and sum |det[U | a]| / ((d-1)! ||a||^2) per simplex."""
    d = polytope.dim
    out = []
    for facet, verts in facet_vertices(polytope):
        a = facet.normal
        norm2 = int(dot(a, a))
        total = 0
        for simplex in triangulate(polytope, face=verts):
            base = simplex[0]
            edges = [tuple(x - y for x, y in zip(v, base)) for v in simplex[1:]]
            total += abs(det_exact(edges + [a]))
        lattice_area = Fraction(total, factorial(d - 1) * norm2)
        k = lattice_area * factorial(d - 1)
        if k.denominator != 1 or k < 1:
            raise InvariantViolation(f"facet {a}: normalized area {k} is not a positive integer")
        out.append(FacetArea(facet, lattice_area, SqrtSum(((lattice_area, norm2),)), int(k)))
    return tuple(out)


def lattice_surface(polytope: VPolytope) -> Fraction:
    return sum((f.lattice_area for f in facet_areas(polytope)), Fraction(0)) / 2


def euclid_surface(polytope: VPolytope) -> SqrtSum:
    total = SqrtSum()
    for f in facet_areas(polytope):
        total = total + f.euclid_area
    return total


def minkowski_relation(areas: Iterable[FacetArea]) -> IntVec:
    """sum k_i a_i over the facets; the zero vector for every polytope."""
    areas = list(areas)
    if not areas:
        return ()
    d = len(areas[0].facet.normal)
    return tuple(sum(f.k * f.facet.normal[j] for f in areas) for j in range(d))


def normal_norm_sum(areas: Iterable[FacetArea]) -> int:
    return sum(f.norm_squared for f in areas)


def simplex_surface_minimum(d: int) -> SqrtSum:
    """(d + sqrt(d)) / (d-1)!: surface of conv{o, e_1, ..., e_d}."""
    return SqrtSum(((Fraction(d, factorial(d - 1)), 1), (Fraction(1, factorial(d - 1)), d)))


def cross_surface_minimum(d: int) -> SqrtSum:
    """(2^d / d!) d^{3/2}: surface of conv{+-e_i}."""
    return SqrtSum(((Fraction(2 ** d * d, factorial(d)), d),))


def iso_ratio_bound(d: int, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    with mpmath.workprec(precision):
        return mpmath.mpf(2) ** d / mpmath.factorial(d) * mpmath.mpf(d) ** (mpmath.mpf(3) * d / 2)


def iso_ratio_check(generators: Sequence[Sequence[int]], rel_tol: float = DEFAULT_REL_TOLERANCE,
                    precision: int = DEFAULT_PRECISION) -> BoundReport:
    """F(C)^d / vol(C)^(d-1) against its minimum for C = conv{+-v_i}."""
    vecs = [tuple(int(x) for x in v) for v in generators]
    d = len(vecs)
    det = det_exact(vecs)
    if det == 0:
        raise DegeneratePolytopeError("cross-polytope generators are linearly dependent")
    cross = VPolytope(d, tuple(vecs) + tuple(tuple(-x for x in v) for v in vecs))
    vol = Fraction(2 ** d * abs(det), factorial(d))
    surface = euclid_surface(cross)
    with mpmath.workprec(precision):
        ratio = surface.evaluate(precision) ** d / (mpmath.mpf(vol.numerator) / vol.denominator) ** (d - 1)
        bound = iso_ratio_bound(d, precision)
        if abs(ratio - bound) <= rel_tol * bound:
            verdict = Verdict.EQUALITY
        elif ratio > bound:
            verdict = Verdict.HOLDS
        else:
            verdict = Verdict.VIOLATED
    entry = BoundEntry(d, 'iso-ratio', LOWER, bound, ratio, verdict)
    logger.debug(f"iso ratio d={d}: {verdict}")
    return BoundReport('iso-cross', str(vecs), (entry,), verdict,
                       notes={'surface': surface, 'volume': vol})


def surface_minimum_check(polytope: VPolytope, rel_tol: float = DEFAULT_REL_TOLERANCE,
                  precision: int = DEFAULT_PRECISION) -> BoundReport:
    """Euclidean surface against the cross-polytope minimum (symmetric input) or the
    corner-simplex minimum (otherwise). Equality needs an exact term-by-term match."""
    d = polytope.dim
    symmetric = is_centrally_symmetric(polytope)
    bound = cross_surface_minimum(d) if symmetric else simplex_surface_minimum(d)
    surface = euclid_surface(polytope)
    if surface == bound:
        verdict = Verdict.EQUALITY
    else:
        verdict = Verdict.VIOLATED if compare(surface, bound, rel_tol, precision) < 0 else Verdict.HOLDS
    notes: Dict[str, Any] = {'branch': 'symmetric' if symmetric else 'general'}
    if verdict == Verdict.HOLDS and compare(surface, bound, rel_tol, precision) == 0:
        notes['near-equality'] = True
    entry = BoundEntry(d - 1, 'surface-minimum', LOWER, bound, surface, verdict)
    return BoundReport('prop110', '', (entry,), verdict, notes=notes)

