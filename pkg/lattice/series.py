"""
h*-level constructions: join product, dilation by multisection, prism recurrence,
pyramid invariance and the closed forms for cubes and boxes.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Any, Dict, Tuple

from .ehrhart import HStar, eulerian, hstar_from_counts, hstar_from_values
from .exceptions import DimensionError, ExpressionError
from .polytope import ConstructionExpr, Dilate, Join, Prism, Pyramid, build

logger = logging.getLogger(__name__)


def join_hstar(hp: HStar, hq: HStar) -> HStar:
    """Ehrhart series multiply under joins, so the numerators do too."""
    out = [0] * (len(hp.coeffs) + len(hq.coeffs) - 1)
    for i, a in enumerate(hp.coeffs):
        for j, b in enumerate(hq.coeffs):
            out[i + j] += a * b
    return HStar(hp.dim + hq.dim + 1, tuple(out))


def dilate_hstar(h: HStar, k: int) -> HStar:
    """h* of the k-th dilate.

    [z^m] Ehr_{kP}(z) = G_P(km) = [w^{km}] Ehr_P(w): averaging Ehr_P over the k-th roots
    of unity keeps exactly these coefficients, so evaluating G_P at multiples of k and
    re-extracting h* is the same multisection without complex arithmetic.
    """
    if k < 1:
        raise DimensionError(f"dilation factor must be >= 1, got {k}")
    if k == 1:
        return h
    return hstar_from_values(h.dim, h.values([k * m for m in range(h.dim + 1)]))


def prism_hstar(hq: HStar, m: int) -> HStar:
    """Prism of height m over Q: a_i = (m i + 1) a_i(Q) + (m (d - i + 1) - 1) a_{i-1}(Q)."""
    if m < 1:
        raise DimensionError(f"prism height must be >= 1, got {m}")
    d = hq.dim + 1
    return HStar(d, tuple((m * i + 1) * hq[i] + (m * (d - i + 1) - 1) * hq[i - 1] for i in range(d + 1)))


def pyramid_hstar(h: HStar) -> HStar:
    return HStar(h.dim + 1, h.coeffs)


def cube_hstar(d: int) -> HStar:
    """h* of [-1, 1]^d in terms of Eulerian numbers."""
    if d < 1:
        raise DimensionError(f"cube dimension must be >= 1, got {d}")
    return HStar(d, tuple(
        sum(comb(d + 1, j) * eulerian(d, 2 * i + 1 - j) for j in range(d + 2)) for i in range(d + 1)
    ))


def box_hstar(l: int, d: int) -> HStar:
    """h* of {|x_1| <= l, |x_i| <= 1}: a prism of height 2l over the (d-1)-cube."""
    if l < 1 or d < 2:
        raise DimensionError(f"box needs l >= 1 and d >= 2, got l={l}, d={d}")
    return prism_hstar(cube_hstar(d - 1), 2 * l)


@dataclass(frozen=True)
class SeriesTransformReport:
    transform: str
    inputs: Tuple[HStar, ...]
    output: HStar
    oracle: HStar

    @property
    def agree(self) -> bool:
        return self.output == self.oracle

    def to_json(self) -> Dict[str, Any]:
        return {
            'transform': self.transform,
            'inputs': [list(h.coeffs) for h in self.inputs],
            'output': list(self.output.coeffs),
            'oracle': list(self.oracle.coeffs),
            'dim': self.output.dim,
            'agree': self.agree,
        }


def compare_transform(expr: ConstructionExpr) -> SeriesTransformReport:
    """Apply the h*-level formula for the outermost node of ``expr`` and compare it with
    brute-force counting of the built polytope."""
    if isinstance(expr, Join):
        inputs: Tuple[HStar, ...] = (hstar_from_counts(build(expr.left)), hstar_from_counts(build(expr.right)))
        name, output = 'join', join_hstar(*inputs)
    elif isinstance(expr, Dilate):
        inputs = (hstar_from_counts(build(expr.base)),)
        name, output = f'dilate({expr.k})', dilate_hstar(inputs[0], expr.k)
    elif isinstance(expr, Prism):
        inputs = (hstar_from_counts(build(expr.base)),)
        name, output = f'prism({expr.m})', prism_hstar(inputs[0], expr.m)
    elif isinstance(expr, Pyramid):
        inputs = (hstar_from_counts(build(expr.base)),)
        name, output = 'pyramid', pyramid_hstar(inputs[0])
    else:
        raise ExpressionError(f"no h*-level transform for {type(expr).__name__}")
    report = SeriesTransformReport(name, inputs, output, hstar_from_counts(build(expr)))
    if not report.agree:
        logger.warning(f"{name}: formula {output.coeffs} != brute force {report.oracle.coeffs}")
    return report
