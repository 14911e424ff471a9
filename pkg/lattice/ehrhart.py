"""
Lattice-point counting, Ehrhart polynomial interpolation, h*-vector extraction and
the memoized combinatorial tables (Stirling, Eulerian, C^d_{r,i}, M_{r,d}).
"""

import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from .exact import RatPoly, solve_exact
from .exceptions import DimensionError, InvariantViolation
from .polytope import VPolytope, facets

logger = logging.getLogger(__name__)

# Beyond this magnitude int64 products may overflow; fall back to Python ints.
_INT64_SAFE = 2 ** 62


def _axis_bounds(rest: np.ndarray, column: np.ndarray, lo: int, hi: int) -> Tuple[np.ndarray, np.ndarray]:
    """Range of the solved coordinate for every row of ``rest`` (remaining slack per facet)."""
    n = rest.shape[0]
    upper = np.full(n, hi, dtype=rest.dtype)
    lower = np.full(n, lo, dtype=rest.dtype)
    pos, neg, flat = column > 0, column < 0, column == 0
    if pos.any():
        upper = np.minimum(upper, np.floor_divide(rest[:, pos], column[pos]).min(axis=1))
    if neg.any():
        lower = np.maximum(lower, -np.floor_divide(rest[:, neg], -column[neg]).min(axis=1))
    if flat.any():
        feasible = (rest[:, flat] >= 0).all(axis=1)
        upper = np.where(feasible, upper, lower - 1)
    return lower, upper


@lru_cache(maxsize=8192)
def count(polytope: VPolytope, k: int = 1, strict: bool = False) -> int:
    """Number of lattice points in kP (strict: in the interior of kP).

    Iterates over all but one coordinate of the bounding box and solves the longest
    axis analytically from the facet inequalities.
    """
    if k < 0:
        raise DimensionError(f"dilation factor must be nonnegative, got {k}")
    if k == 0:
        return 0 if strict else 1
    hrep = facets(polytope)
    d = polytope.dim
    lo_box, hi_box = polytope.bounding_box()
    lo = [k * x for x in lo_box]
    hi = [k * x for x in hi_box]
    offsets = [k * f.offset - (1 if strict else 0) for f in hrep.facets]

    magnitude = max(abs(b) for b in offsets) + max(
        sum(abs(a) for a in f.normal) for f in hrep.facets
    ) * max(max(abs(x) for x in lo), max(abs(x) for x in hi))
    dtype: Any = np.int64 if magnitude < _INT64_SAFE else object
    normals = np.array([f.normal for f in hrep.facets], dtype=dtype)
    rhs = np.array(offsets, dtype=dtype)

    solve = max(range(d), key=lambda j: hi[j] - lo[j])
    others = [j for j in range(d) if j != solve]
    column = normals[:, solve]

    def count_block(fixed: np.ndarray, cols: List[int]) -> int:
        rest = rhs[None, :] - fixed @ normals[:, cols].T if cols else np.tile(rhs, (fixed.shape[0], 1))
        lower, upper = _axis_bounds(rest, column, lo[solve], hi[solve])
        return int(np.maximum(upper - lower + 1, 0).sum())

    if not others:
        total = count_block(np.zeros((1, 0), dtype=dtype), [])
    else:
        outer, inner = others[0], others[1:]
        if inner:
            axes = np.meshgrid(*[np.arange(lo[j], hi[j] + 1, dtype=np.int64) for j in inner], indexing='ij')
            inner_grid = np.stack([a.ravel() for a in axes], axis=1).astype(dtype)
        else:
            inner_grid = np.zeros((1, 0), dtype=dtype)
        total = 0
        for value in range(lo[outer], hi[outer] + 1):
            outer_col = np.full((inner_grid.shape[0], 1), value, dtype=dtype)
            total += count_block(np.hstack([outer_col, inner_grid]), [outer] + inner)
    logger.debug(f"count: k={k} strict={strict} dim={d} -> {total}")
    return total


@dataclass(frozen=True)
class EhrhartPoly:
    """G_P(k) = sum g_i k^i with exact rational coefficients."""

    dim: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.dim + 1:
            raise DimensionError(f"expected {self.dim + 1} coefficients, got {len(self.coeffs)}")
        if self.coeffs[0] != 1:
            raise InvariantViolation(f"constant term {self.coeffs[0]} != 1")
        if self.coeffs[-1] <= 0:
            raise InvariantViolation(f"leading coefficient {self.coeffs[-1]} is not positive")

    def __call__(self, k: int) -> Fraction:
        return RatPoly(self.coeffs)(k)

    def g(self, i: int) -> Fraction:
        return self.coeffs[i]

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def reciprocal(self, k: int) -> Fraction:
        """(-1)^d G_P(-k); equals the interior count of kP for k >= 1."""
        return (-1) ** self.dim * self(-k)


def ehrhart_poly(polytope: VPolytope) -> EhrhartPoly:
    d = polytope.dim
    nodes = range(d + 1)
    vandermonde = [[k ** i for i in range(d + 1)] for k in nodes]
    coeffs = solve_exact(vandermonde, [count(polytope, k) for k in nodes])
    return EhrhartPoly(d, coeffs)


@dataclass(frozen=True)
class HStar:
    """Numerator a_0 + a_1 z + ... + a_d z^d of the Ehrhart series."""

    dim: int
    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        cs = tuple(int(a) for a in self.coeffs)
        if len(cs) > self.dim + 1:
            if any(cs[self.dim + 1:]):
                raise DimensionError(f"h*-vector {cs} has nonzero entries beyond degree {self.dim}")
            cs = cs[:self.dim + 1]
        cs = cs + (0,) * (self.dim + 1 - len(cs))
        if cs[0] != 1:
            raise InvariantViolation(f"a_0 = {cs[0]} != 1")
        if any(a < 0 for a in cs):
            raise InvariantViolation(f"negative h*-coefficient in {cs}")
        object.__setattr__(self, 'coeffs', cs)

    @property
    def degree(self) -> int:
        return max(i for i, a in enumerate(self.coeffs) if a)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i <= self.dim else 0

    def lattice_points(self) -> int:
        return self[1] + self.dim + 1

    def interior_points(self) -> int:
        return self[self.dim]

    def polynomial(self) -> RatPoly:
        """G_P(z) = sum_i a_i binom(z + d - i, d)."""
        d = self.dim
        total = RatPoly()
        for i, a in enumerate(self.coeffs):
            if a:
                total = total + RatPoly.shifted_falling(d - i, d).scale(Fraction(a, factorial(d)))
        return total

    def values(self, ks: Sequence[int]) -> List[int]:
        poly = self.polynomial()
        return [int(poly(k)) for k in ks]


def hstar_from_values(d: int, values: Sequence[int]) -> HStar:
    """Basis change from G(0..d) to h*, done twice: alternating sum and triangular solve."""
    if len(values) != d + 1:
        raise DimensionError(f"need {d + 1} values G(0..{d}), got {len(values)}")
    alternating = tuple(
        sum((-1) ** i * comb(d + 1, i) * values[j - i] for i in range(j + 1)) for j in range(d + 1)
    )
    binomial_basis = [[comb(k + d - i, d) if k >= i else 0 for i in range(d + 1)] for k in range(d + 1)]
    solved = solve_exact(binomial_basis, values)
    if any(Fraction(a) != s for a, s in zip(alternating, solved)):
        raise InvariantViolation(f"h* basis changes disagree: {alternating} vs {solved}")
    return HStar(d, alternating)


def hstar_from_counts(polytope: VPolytope) -> HStar:
    d = polytope.dim
    return hstar_from_values(d, [count(polytope, k) for k in range(d + 1)])


def volume(h: HStar) -> Fraction:
    return Fraction(sum(h.coeffs), factorial(h.dim))


class CoeffTable:
    """Memoized exact combinatorial numbers, safe to share between threads."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._cache: Dict[Tuple[str, int, int, int], int] = {}

    def _memo(self, key: Tuple[str, int, int, int], compute: Any) -> int:
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = int(compute())
        with self._lock:
            return self._cache.setdefault(key, value)

    def __len__(self) -> int:
        with self._lock:
            return len(self._cache)

    def stirling1(self, n: int, k: int) -> int:
        if not 0 <= k <= n:
            raise DimensionError(f"stirl({n},{k}) needs 0 <= k <= n")
        return self._memo(('s', n, k, 0), lambda: RatPoly.shifted_falling(0, n).coefficient(k))

    def eulerian(self, n: int, j: int) -> int:
        if not 0 <= j <= n:
            return 0
        return self._memo(('a', n, j, 0),
                          lambda: sum((-1) ** k * comb(n + 1, k) * (j - k) ** n for k in range(j + 1)))

    def c_coeff(self, d: int, r: int, i: int) -> int:
        """Coefficient of z^r in (z+i)(z+i-1)...(z+i-(d-1))."""
        if not 0 <= r <= d:
            raise DimensionError(f"C^{d}_{{{r},{i}}} needs 0 <= r <= d")
        return self._memo(('c', d, r, i), lambda: RatPoly.shifted_falling(i, d).coefficient(r))

    def m_coeff(self, d: int, r: int) -> int:
        if d < 3:
            raise DimensionError(f"M_{{{r},{d}}} is defined for d >= 3")
        if not 0 <= r <= d:
            raise DimensionError(f"M_{{{r},{d}}} needs 0 <= r <= d")
        return self._memo(('m', d, r, 0), lambda: min(self.c_coeff(d, r, i) for i in range(1, d - 1)))


TABLE = CoeffTable()


def stirling1(n: int, k: int) -> int:
    return TABLE.stirling1(n, k)


def eulerian(n: int, j: int) -> int:
    return TABLE.eulerian(n, j)


def c_coeff(d: int, r: int, i: int) -> int:
    return TABLE.c_coeff(d, r, i)


def m_coeff(d: int, r: int) -> int:
    return TABLE.m_coeff(d, r)
