"""
Lattice polytopes: V- and H-representations, facet enumeration, vertices, the
construction algebra (join, prism, pyramid, dilate) and the named families.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .exact import IntVec, affine_rank, det_exact, dot, int_vec, kernel_vector, rank_exact
from .exceptions import DegeneratePolytopeError, DimensionError, ExpressionError, InvariantViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of integer generators; generators need not be vertices."""

    dim: int
    generators: Tuple[IntVec, ...]

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise DimensionError(f"negative dimension {self.dim}")
        seen: Dict[IntVec, None] = {}
        for g in self.generators:
            vec = int_vec(g)
            if len(vec) != self.dim:
                raise DimensionError(f"generator {vec} does not have length {self.dim}")
            seen.setdefault(vec, None)
        if not seen:
            raise DegeneratePolytopeError("a polytope needs at least one generator")
        gens = tuple(seen)
        if affine_rank(gens) != self.dim:
            raise DegeneratePolytopeError(
                f"generators span affine dimension {affine_rank(gens)}, expected {self.dim}"
            )
        object.__setattr__(self, 'generators', gens)

    @classmethod
    def from_points(cls, points: Iterable[Sequence[int]]) -> 'VPolytope':
        pts = [int_vec(p) for p in points]
        if not pts:
            raise DegeneratePolytopeError("a polytope needs at least one generator")
        return cls(len(pts[0]), tuple(pts))

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'VPolytope':
        try:
            return cls(int(data['dim']), tuple(int_vec(g) for g in data['generators']))
        except (KeyError, TypeError) as exc:
            raise ExpressionError(f"malformed polytope document: {exc}") from exc

    def to_json(self) -> Dict[str, Any]:
        return {'dim': self.dim, 'generators': [list(g) for g in self.generators]}

    def bounding_box(self) -> Tuple[IntVec, IntVec]:
        cols = list(zip(*self.generators))
        return tuple(min(c) for c in cols), tuple(max(c) for c in cols)


@dataclass(frozen=True, order=True)
class HFacet:
    normal: IntVec
    offset: int

    def value(self, x: Sequence[int]) -> int:
        return int(dot(self.normal, x))


@dataclass(frozen=True)
class HRep:
    dim: int
    facets: Tuple[HFacet, ...]

    def scaled(self, k: int) -> 'HRep':
        return HRep(self.dim, tuple(HFacet(f.normal, f.offset * k) for f in self.facets))


def _reduce(v: Sequence[int]) -> IntVec:
    g = gcd(*v)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _initial_simplex(points: Sequence[IntVec], d: int) -> List[int]:
    chosen = [0]
    for i in range(1, len(points)):
        if affine_rank([points[j] for j in chosen] + [points[i]]) == len(chosen):
            chosen.append(i)
            if len(chosen) == d + 1:
                break
    return chosen


@lru_cache(maxsize=4096)
def facets(polytope: VPolytope) -> HRep:
    """Facet description via the double description method on the homogenized cone.

    A pair (a, b) is a valid inequality a.x <= b iff (a, -b) pairs nonpositively with
    every lifted generator (v, 1); the extreme rays of that cone are the facets.
    """
    d = polytope.dim
    if d < 1:
        raise DimensionError("facets are defined for dimension >= 1")
    points = polytope.generators
    lifted = [tuple(p) + (-1,) for p in points]

    def val(ray: IntVec, j: int) -> int:
        return int(dot(ray, lifted[j]))

    simplex = _initial_simplex(points, d)
    rays: List[Tuple[IntVec, FrozenSet[int]]] = []
    for i in simplex:
        others = [j for j in simplex if j != i]
        ray = kernel_vector([lifted[j] for j in others])
        if val(ray, i) > 0:
            ray = tuple(-x for x in ray)
        rays.append((_reduce(ray), frozenset(others)))

    in_simplex = set(simplex)
    for j in range(len(points)):
        if j in in_simplex:
            continue
        values = [val(r, j) for r, _ in rays]
        plus = [(r, z, v) for (r, z), v in zip(rays, values) if v > 0]
        if not plus:
            rays = [(r, z | {j}) if v == 0 else (r, z) for (r, z), v in zip(rays, values)]
            continue
        minus = [(r, z, v) for (r, z), v in zip(rays, values) if v < 0]
        kept = [(r, z | {j}) if v == 0 else (r, z) for (r, z), v in zip(rays, values) if v <= 0]
        for (rp, zp, vp), (rm, zm, vm) in itertools.product(plus, minus):
            common = zp & zm
            if len(common) < d - 1 or rank_exact([lifted[c] for c in common]) != d - 1:
                continue
            combined = tuple(vp * x - vm * y for x, y in zip(rm, rp))
            kept.append((_reduce(combined), common | {j}))
        rays = kept

    found = set()
    for ray, _ in rays:
        normal, offset = ray[:-1], ray[-1]
        g = gcd(*normal)
        if g == 0:
            raise InvariantViolation(f"degenerate ray {ray} in facet enumeration")
        if offset % g:
            raise InvariantViolation(f"facet offset {offset} not divisible by normal content {g}")
        found.add(HFacet(tuple(x // g for x in normal), offset // g))
    hrep = HRep(d, tuple(sorted(found)))
    logger.debug(f"facets: {len(points)} generators in dim {d} -> {len(hrep.facets)} facets")
    return hrep


def contains(hrep: HRep, x: Sequence[int], strict: bool = False) -> bool:
    if len(x) != hrep.dim:
        raise DimensionError(f"point of length {len(x)} tested against dimension {hrep.dim}")
    if strict:
        return all(f.value(x) < f.offset for f in hrep.facets)
    return all(f.value(x) <= f.offset for f in hrep.facets)


@lru_cache(maxsize=4096)
def vertices(polytope: VPolytope) -> Tuple[IntVec, ...]:
    """Generators at which the tight facet normals span R^d, sorted lexicographically."""
    if polytope.dim == 0:
        return polytope.generators
    hrep = facets(polytope)
    out = []
    for g in polytope.generators:
        tight = [f.normal for f in hrep.facets if f.value(g) == f.offset]
        if len(tight) >= polytope.dim and rank_exact(tight) == polytope.dim:
            out.append(g)
    return tuple(sorted(out))


def facet_vertices(polytope: VPolytope) -> List[Tuple[HFacet, Tuple[IntVec, ...]]]:
    verts = vertices(polytope)
    return [(f, tuple(v for v in verts if f.value(v) == f.offset)) for f in facets(polytope).facets]


def is_centrally_symmetric(polytope: VPolytope) -> bool:
    verts = set(vertices(polytope))
    return verts == {tuple(-x for x in v) for v in verts}


class _Puller:
    """Pulling triangulation: every face is coned from its smallest vertex over the
    subfaces that avoid it. Vertex lists are lexicographically sorted, so the smallest
    index is the lexicographically smallest vertex."""

    def __init__(self, polytope: VPolytope) -> None:
        self.verts = vertices(polytope)
        self.incidence = [
            frozenset(i for i, v in enumerate(self.verts) if f.value(v) == f.offset)
            for f in facets(polytope).facets
        ]
        self._memo: Dict[FrozenSet[int], List[Tuple[int, ...]]] = {}

    def rank(self, face: Iterable[int]) -> int:
        return affine_rank([self.verts[i] for i in sorted(face)])

    def subfaces(self, face: FrozenSet[int], dim: int) -> List[FrozenSet[int]]:
        found = {face & inc for inc in self.incidence}
        return sorted((g for g in found if len(g) >= dim and self.rank(g) == dim - 1), key=sorted)

    def simplices(self, face: FrozenSet[int], dim: int) -> List[Tuple[int, ...]]:
        if face in self._memo:
            return self._memo[face]
        if dim == 0:
            result = [(min(face),)]
        else:
            apex = min(face)
            result = [
                (apex,) + simplex
                for sub in self.subfaces(face, dim)
                if apex not in sub
                for simplex in self.simplices(sub, dim - 1)
            ]
        self._memo[face] = result
        return result

    def points(self, simplex: Tuple[int, ...]) -> Tuple[IntVec, ...]:
        return tuple(self.verts[i] for i in simplex)


def triangulate(polytope: VPolytope, face: Optional[Sequence[IntVec]] = None) -> List[Tuple[IntVec, ...]]:
    """Simplices of a pulling triangulation of ``face`` (default: the whole polytope)."""
    puller = _Puller(polytope)
    if face is None:
        members = frozenset(range(len(puller.verts)))
    else:
        index = {v: i for i, v in enumerate(puller.verts)}
        members = frozenset(index[tuple(v)] for v in face)
    dim = puller.rank(members)
    return [puller.points(s) for s in puller.simplices(members, dim)]


def simplex_volume(simplex: Sequence[IntVec]) -> Fraction:
    base = simplex[0]
    edges = [tuple(x - y for x, y in zip(v, base)) for v in simplex[1:]]
    return Fraction(abs(det_exact(edges)), factorial(len(edges)))


def volume_exact(polytope: VPolytope) -> Fraction:
    return sum((simplex_volume(s) for s in triangulate(polytope)), Fraction(0))


# Construction algebra -------------------------------------------------------------

def _unit(d: int, i: int, scale: int = 1) -> IntVec:
    return tuple(scale if j == i else 0 for j in range(d))


def _positive(**params: int) -> None:
    for name, value in params.items():
        if not isinstance(value, int) or value < 1:
            raise ExpressionError(f"parameter {name} must be a positive integer, got {value!r}")


class ConstructionExpr:
    """Node of a construction tree; ``points`` yields integer generators."""

    @property
    def dim(self) -> int:
        raise NotImplementedError

    def points(self) -> List[IntVec]:
        raise NotImplementedError


@dataclass(frozen=True)
class S(ConstructionExpr):
    """conv{o, e_1, ..., e_{d-1}, m e_d}."""

    m: int
    d: int

    def __post_init__(self) -> None:
        _positive(m=self.m, d=self.d)

    @property
    def dim(self) -> int:
        return self.d

    def points(self) -> List[IntVec]:
        d = self.d
        return [(0,) * d] + [_unit(d, i) for i in range(d - 1)] + [_unit(d, d - 1, self.m)]


@dataclass(frozen=True)
class T(ConstructionExpr):
    """conv{o, e_1, e_1+e_2, e_2+e_3, ..., e_{d-2}+e_{d-1}, e_{d-1}+m e_d}."""

    m: int
    d: int

    def __post_init__(self) -> None:
        _positive(m=self.m, d=self.d)

    @property
    def dim(self) -> int:
        return self.d

    def points(self) -> List[IntVec]:
        d = self.d
        if d == 1:
            return [(0,), (self.m,)]
        pts = [(0,) * d, _unit(d, 0)]
        for i in range(1, d - 1):
            pts.append(tuple(a + b for a, b in zip(_unit(d, i - 1), _unit(d, i))))
        pts.append(tuple(a + b for a, b in zip(_unit(d, d - 2), _unit(d, d - 1, self.m))))
        return pts


@dataclass(frozen=True)
class StdSimplex(ConstructionExpr):
    d: int

    def __post_init__(self) -> None:
        _positive(d=self.d)

    @property
    def dim(self) -> int:
        return self.d

    def points(self) -> List[IntVec]:
        return S(1, self.d).points()


@dataclass(frozen=True)
class UnitCube(ConstructionExpr):
    d: int

    def __post_init__(self) -> None:
        _positive(d=self.d)

    @property
    def dim(self) -> int:
        return self.d

    def points(self) -> List[IntVec]:
        return list(itertools.product((0, 1), repeat=self.d))


@dataclass(frozen=True)
class SymCube(ConstructionExpr):
    d: int

    def __post_init__(self) -> None:
        _positive(d=self.d)

    @property
    def dim(self) -> int:
        return self.d

    def points(self) -> List[IntVec]:
        return list(itertools.product((-1, 1), repeat=self.d))


@dataclass(frozen=True)
class CrossOdd(ConstructionExpr):
    """conv{+-l e_1, +-e_i : 2 <= i <= d}; it has 2l-1 interior lattice points."""

    l: int
    d: int

    def __post_init__(self) -> None:
        _positive(l=self.l, d=self.d)

    @property
    def dim(self) -> int:
        return self.d

    def points(self) -> List[IntVec]:
        d = self.d
        pts = []
        for i in range(d):
            scale = self.l if i == 0 else 1
            pts += [_unit(d, i, scale), _unit(d, i, -scale)]
        return pts


@dataclass(frozen=True)
class CrossPolytope(ConstructionExpr):
    d: int

    def __post_init__(self) -> None:
        _positive(d=self.d)

    @property
    def dim(self) -> int:
        return self.d

    def points(self) -> List[IntVec]:
        return CrossOdd(1, self.d).points()


@dataclass(frozen=True)
class Box(ConstructionExpr):
    """{|x_1| <= l, |x_i| <= 1}."""

    l: int
    d: int

    def __post_init__(self) -> None:
        _positive(l=self.l, d=self.d)

    @property
    def dim(self) -> int:
        return self.d

    def points(self) -> List[IntVec]:
        return [(self.l * s,) + rest
                for s in (-1, 1)
                for rest in itertools.product((-1, 1), repeat=self.d - 1)]


@dataclass(frozen=True)
class Explicit(ConstructionExpr):
    polytope: VPolytope

    @property
    def dim(self) -> int:
        return self.polytope.dim

    def points(self) -> List[IntVec]:
        return list(self.polytope.generators)


@dataclass(frozen=True)
class Join(ConstructionExpr):
    """conv{(x, 0_q, 0), (0_p, y, 1)}."""

    left: ConstructionExpr
    right: ConstructionExpr

    @property
    def dim(self) -> int:
        return self.left.dim + self.right.dim + 1

    def points(self) -> List[IntVec]:
        p, q = self.left.dim, self.right.dim
        return ([tuple(x) + (0,) * q + (0,) for x in build(self.left).generators]
                + [(0,) * p + tuple(y) + (1,) for y in build(self.right).generators])


@dataclass(frozen=True)
class Prism(ConstructionExpr):
    """Base placed at heights 0 and m in a new last coordinate."""

    base: ConstructionExpr
    m: int

    def __post_init__(self) -> None:
        _positive(m=self.m)

    @property
    def dim(self) -> int:
        return self.base.dim + 1

    def points(self) -> List[IntVec]:
        gens = build(self.base).generators
        return [tuple(x) + (0,) for x in gens] + [tuple(x) + (self.m,) for x in gens]


@dataclass(frozen=True)
class Pyramid(ConstructionExpr):
    base: ConstructionExpr

    @property
    def dim(self) -> int:
        return self.base.dim + 1

    def points(self) -> List[IntVec]:
        d = self.base.dim
        return [tuple(x) + (0,) for x in build(self.base).generators] + [_unit(d + 1, d)]


@dataclass(frozen=True)
class Dilate(ConstructionExpr):
    base: ConstructionExpr
    k: int

    def __post_init__(self) -> None:
        _positive(k=self.k)

    @property
    def dim(self) -> int:
        return self.base.dim

    def points(self) -> List[IntVec]:
        return [tuple(self.k * x for x in g) for g in build(self.base).generators]


@lru_cache(maxsize=1024)
def build(expr: ConstructionExpr) -> VPolytope:
    if not isinstance(expr, ConstructionExpr):
        raise ExpressionError(f"not a construction expression: {expr!r}")
    return VPolytope(expr.dim, tuple(expr.points()))


def pyramid_tower(expr: ConstructionExpr, times: int) -> ConstructionExpr:
    for _ in range(times):
        expr = Pyramid(expr)
    return expr


def t_tilde(m: int, d: int) -> ConstructionExpr:
    """(d-4)-fold pyramid over T(m, 4), i.e. conv{T(m,4), e_5, ..., e_d}."""
    if d < 4:
        raise ExpressionError(f"the pyramid tower over T(m,4) needs d >= 4, got {d}")
    return pyramid_tower(T(m, 4), d - 4)


# Random corpora ---------------------------------------------------------------------

def random_lattice_polytope(dim: int, box: int, count: int, seed: int,
                            symmetric: bool = False, max_retries: int = 100) -> VPolytope:
    if dim < 2 or box < 1 or count < dim + 1:
        raise DimensionError(f"need dim >= 2, box >= 1, count >= dim+1; got ({dim}, {box}, {count})")
    rng = random.Random(seed)
    for attempt in range(max_retries):
        pts = [tuple(rng.randint(-box, box) for _ in range(dim)) for _ in range(count)]
        if symmetric:
            pts += [tuple(-x for x in p) for p in pts]
        if affine_rank(list(dict.fromkeys(pts))) == dim:
            return VPolytope(dim, tuple(pts))
        logger.debug(f"random polytope seed={seed}: attempt {attempt + 1} not full-dimensional")
    raise DegeneratePolytopeError(
        f"no full-dimensional sample after {max_retries} attempts (dim={dim}, box={box}, count={count})"
    )


def random_corpus(dim: int, box: int, count: int, size: int, seed: int,
                  symmetric: bool = False, max_retries: int = 100) -> List[Tuple[int, VPolytope]]:
    rng = random.Random(seed)
    member_seeds = [rng.randrange(2 ** 32) for _ in range(size)]
    return [(i, random_lattice_polytope(dim, box, count, s, symmetric, max_retries))
            for i, s in enumerate(member_seeds)]


def random_cross_generators(dim: int, box: int, seed: int, max_retries: int = 100) -> Tuple[IntVec, ...]:
    """``dim`` linearly independent integer vectors in [-box, box]^dim."""
    if dim < 1 or box < 1:
        raise DimensionError(f"need dim >= 1 and box >= 1; got ({dim}, {box})")
    rng = random.Random(seed)
    for _ in range(max_retries):
        vecs = tuple(tuple(rng.randint(-box, box) for _ in range(dim)) for _ in range(dim))
        if det_exact(vecs) != 0:
            return vecs
    raise DegeneratePolytopeError(f"no independent sample after {max_retries} attempts")


def cross_generators(polytope: VPolytope) -> Tuple[IntVec, ...]:
    """Recover v_1..v_d from a polytope of the form conv{+-v_i}."""
    verts = vertices(polytope)
    halves = tuple(v for v in verts if v > tuple(-x for x in v))
    if (len(verts) != 2 * polytope.dim or not is_centrally_symmetric(polytope)
            or det_exact(halves) == 0):
        raise DegeneratePolytopeError("polytope is not a cross-polytope conv{+-v_i}")
    return halves
