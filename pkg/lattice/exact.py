"""
Exact integer/rational arithmetic and the linear-algebra kernels used across the app.

Rationals are ``fractions.Fraction`` (always reduced, positive denominator). Integer
vectors and matrices are plain tuples of Python ints, so nothing ever rounds.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from .exceptions import DimensionError, SingularMatrixError

IntVec = Tuple[int, ...]
IntMat = Tuple[IntVec, ...]
Number = Union[int, Fraction]


def int_vec(values: Iterable[int]) -> IntVec:
    return tuple(int(v) for v in values)


def identity(n: int) -> IntMat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def dot(u: Sequence[Number], v: Sequence[Number]) -> Number:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} != {len(v)}")
    return sum((a * b for a, b in zip(u, v)), 0)


def mat_vec(rows: Sequence[Sequence[Number]], x: Sequence[Number]) -> Tuple[Number, ...]:
    return tuple(dot(r, x) for r in rows)


def _require_square(rows: Sequence[Sequence[Number]]) -> int:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError(f"expected a square matrix, got {n} rows of lengths {[len(r) for r in rows]}")
    return n


def det_exact(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination; every division is exact."""
    n = _require_square(matrix)
    if n == 0:
        return 1
    m: List[List[int]] = [list(r) for r in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            row, lead = m[i], m[i][k]
            for j in range(k + 1, n):
                row[j] = (row[j] * pivot - lead * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def rank_exact(matrix: Sequence[Sequence[Number]]) -> int:
    rows = [[Fraction(x) for x in r] for r in matrix]
    if not rows:
        return 0
    cols = len(rows[0])
    if any(len(r) != cols for r in rows):
        raise DimensionError("matrix rows have different lengths")
    rank = 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        top = rows[rank]
        for i in range(rank + 1, len(rows)):
            factor = rows[i][c] / top[c]
            if factor:
                rows[i] = [x - factor * y for x, y in zip(rows[i], top)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def solve_exact(matrix: Sequence[Sequence[Number]], rhs: Sequence[Number]) -> Tuple[Fraction, ...]:
    """Solve ``A x = b`` by Gauss-Jordan elimination over the rationals.

    Raises SingularMatrixError when A has no inverse.
    """
    n = _require_square(matrix)
    if len(rhs) != n:
        raise DimensionError(f"right-hand side has length {len(rhs)}, expected {n}")
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pivot is None:
            raise SingularMatrixError(f"matrix is singular (no pivot in column {c})")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        lead = aug[c][c]
        aug[c] = [x / lead for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[c])]
    return tuple(row[n] for row in aug)


def primitive(v: Sequence[int]) -> IntVec:
    """Divide by the gcd of the entries; the first nonzero entry ends up positive."""
    g = math.gcd(*v) if v else 0
    if g == 0:
        raise DimensionError("zero vector has no primitive direction")
    first = next(x for x in v if x != 0)
    if first < 0:
        g = -g
    return tuple(x // g for x in v)


def kernel_vector(rows: Sequence[Sequence[int]]) -> IntVec:
    """Integer vector spanning the kernel of an n x (n+1) matrix of rank n.

    Entry k is the signed maximal minor with column k deleted (generalized cross
    product), so the result is integral without any division.
    """
    n = len(rows)
    if any(len(r) != n + 1 for r in rows):
        raise DimensionError("kernel_vector expects an n x (n+1) matrix")
    out = []
    for k in range(n + 1):
        minor = [tuple(x for j, x in enumerate(r) if j != k) for r in rows]
        out.append((-1) ** k * det_exact(minor))
    if not any(out):
        raise SingularMatrixError("rows are linearly dependent")
    return tuple(out)


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    if not points:
        return -1
    base = points[0]
    return rank_exact([tuple(x - y for x, y in zip(p, base)) for p in points[1:]])


@dataclass(frozen=True)
class RatPoly:
    """Dense polynomial with exact rational coefficients; ``coeffs[i]`` multiplies z^i."""

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, 'coeffs', tuple(cs))

    @classmethod
    def of(cls, *coeffs: Number) -> 'RatPoly':
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def shifted_falling(cls, shift: int, length: int) -> 'RatPoly':
        """(z + shift)(z + shift - 1) ... (z + shift - (length - 1))."""
        result = cls.of(1)
        for j in range(length):
            result = result * cls.of(shift - j, 1)
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, r: int) -> Fraction:
        return self.coeffs[r] if 0 <= r < len(self.coeffs) else Fraction(0)

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: 'RatPoly') -> 'RatPoly':
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    def __mul__(self, other: 'RatPoly') -> 'RatPoly':
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(tuple(out))

    def scale(self, factor: Number) -> 'RatPoly':
        return RatPoly(tuple(c * factor for c in self.coeffs))
