"""
Verifiers for the lower/upper bounds on Ehrhart coefficients, the h*-inequalities and
the constructive degree-2 classification.
"""

import logging
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Optional

from .choices import Verdict
from .ehrhart import EhrhartPoly, HStar, m_coeff, stirling1
from .exceptions import DimensionError, InadmissiblePairError, InvariantViolation, NotApplicableError
from .polytope import VPolytope, is_centrally_symmetric
from .results import LOWER, UPPER, BoundEntry, BoundReport, exact_entry, summarize
from .surface import lattice_surface

logger = logging.getLogger(__name__)


def _check_range(d: int, i: int, min_d: int = 3) -> None:
    if d < min_d:
        raise DimensionError(f"bound needs d >= {min_d}, got {d}")
    if not 1 <= i <= d - 1:
        raise DimensionError(f"index i={i} outside 1..{d - 1}")


def harmonic(n: int) -> Fraction:
    return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))


def volume_lower(d: int, i: int, vol: Fraction) -> Fraction:
    """(1/d!) [(-1)^(d-i) stirl(d+1, i+1) + (d! vol - 1) M_{i,d}]; may be negative."""
    _check_range(d, i)
    df = factorial(d)
    return ((-1) ** (d - i) * stirling1(d + 1, i + 1) + (df * Fraction(vol) - 1) * m_coeff(d, i)) / df


def improved_volume_lower(d: int, i: int, vol: Fraction, lattice_points: int) -> Fraction:
    """Adds 2(G(P) - (d+1)) / d!, i.e. twice a_1 / d!, to the volume bound."""
    _check_range(d, i)
    if (i, d) == (2, 3):
        raise NotApplicableError("the improved bound does not hold for i = 2, d = 3")
    return volume_lower(d, i, vol) + Fraction(2 * lattice_points - 2 * (d + 1), factorial(d))


def specialized_bounds(d: int, vol: Fraction) -> Dict[int, Fraction]:
    """Closed forms of the volume bound at i in {1, 2, d-2}, cross-checked against it."""
    if d < 3:
        raise DimensionError(f"bound needs d >= 3, got {d}")
    df = factorial(d)
    scaled = df * Fraction(vol)
    if d % 2:
        near_top = Fraction((d - 1) * d * (d + 1), 24 * df) * (3 * (d + 1) - scaled)
    else:
        near_top = Fraction((d - 1) * d, 24 * df) * (3 * d * (d + 2) - (d - 2) * scaled)
    candidates = [
        (1, harmonic(d - 2) + Fraction(2, d - 1) - factorial(d - 2) * Fraction(vol)),
        (2, Fraction((-1) ** d, df) * (
            stirling1(d + 1, 3) + ((-1) ** d * factorial(d - 2) + stirling1(d - 1, 2)) * (scaled - 1)
        )),
        (d - 2, near_top),
    ]
    out: Dict[int, Fraction] = {}
    for i, value in candidates:
        if not 1 <= i <= d - 1:
            continue
        general = volume_lower(d, i, vol)
        if value != general:
            raise InvariantViolation(f"closed form at i={i}, d={d} gives {value}, general bound {general}")
        out[i] = value
    return dict(sorted(out.items()))


def coefficient_upper(d: int, i: int, vol: Fraction) -> Fraction:
    """(-1)^(d-i) stirl(d,i) vol + (-1)^(d-i-1) stirl(d,i+1) / (d-1)!."""
    _check_range(d, i, min_d=2)
    return ((-1) ** (d - i) * stirling1(d, i) * Fraction(vol)
            + Fraction((-1) ** (d - i - 1) * stirling1(d, i + 1), factorial(d - 1)))


def surface_lower(d: int) -> Fraction:
    """Every facet has lattice area at least 1/(d-1)! and there are at least d+1 of them."""
    if d < 1:
        raise DimensionError(f"bound needs d >= 1, got {d}")
    return Fraction(d + 1, 2 * factorial(d - 1))


def volume_bound_report(poly: EhrhartPoly, lattice_points: int) -> BoundReport:
    d = poly.dim
    vol = poly.leading
    entries: List[BoundEntry] = []
    for i in range(1, d):
        entries.append(exact_entry(i, 'volume-lower', LOWER, volume_lower(d, i, vol), poly.g(i)))
        if (i, d) != (2, 3):
            entries.append(exact_entry(i, 'improved-lower', LOWER,
                                       improved_volume_lower(d, i, vol, lattice_points), poly.g(i)))
    return BoundReport('thm11', '', tuple(entries), summarize(entries))


def specialized_bound_report(poly: EhrhartPoly) -> BoundReport:
    entries = [exact_entry(i, 'specialized-lower', LOWER, value, poly.g(i))
               for i, value in specialized_bounds(poly.dim, poly.leading).items()]
    return BoundReport('corollary12', '', tuple(entries), summarize(entries))


def upper_bound_report(poly: EhrhartPoly) -> BoundReport:
    d = poly.dim
    entries = [exact_entry(i, 'upper', UPPER, coefficient_upper(d, i, poly.leading), poly.g(i)) for i in range(1, d)]
    return BoundReport('bm-upper', '', tuple(entries), summarize(entries))


def surface_bound_report(poly: EhrhartPoly) -> BoundReport:
    d = poly.dim
    entries = [exact_entry(d - 1, 'surface-lower', LOWER, surface_lower(d), poly.g(d - 1))]
    return BoundReport('eq15', '', tuple(entries), summarize(entries))


def hibi_check(h: HStar) -> BoundReport:
    """a_i >= a_1 for 1 <= i <= deg - 1, a theorem when the interior has a lattice point.

    Without interior points a violation is the expected counterexample, not a failure.
    """
    deg = h.degree
    hypothesis = h[h.dim] > 0
    entries = [exact_entry(i, 'hibi', LOWER, h[1], h[i]) for i in range(1, deg)]
    violated_at = [e.index for e in entries if e.verdict == Verdict.VIOLATED]
    if not violated_at:
        verdict = Verdict.HOLDS
    elif hypothesis:
        verdict = Verdict.VIOLATED
    else:
        verdict = Verdict.COUNTEREXAMPLE_CONFIRMED
    notes = {'degree': deg, 'hypothesis': hypothesis, 'violated-at': violated_at}
    return BoundReport('hibi', '', tuple(entries), verdict, notes=notes)


def treutlein_violation(a1: int, a2: int) -> Optional[str]:
    """Name of the degree-2 inequality (a_1, a_2) violates, or None."""
    if a2 == 1 and a1 > 7:
        return 'a_1 ≤ 7'
    if a2 >= 2 and a1 > 3 * a2 + 3:
        return 'a_1 ≤ 3a_2+3'
    return None


def treutlein_check(a1: int, a2: int) -> bool:
    return treutlein_violation(a1, a2) is None


def treutlein_report(h: HStar) -> BoundReport:
    if h.degree != 2:
        return BoundReport('treutlein', '', (), Verdict.NOT_APPLICABLE, notes={'degree': h.degree})
    a1, a2 = h[1], h[2]
    limit = 7 if a2 == 1 else 3 * a2 + 3
    entries = [exact_entry(1, 'treutlein', UPPER, Fraction(limit), Fraction(a1))]
    return BoundReport('treutlein', '', tuple(entries), summarize(entries), notes={'degree': 2})


def degree2_witness(a1: int, a2: int) -> VPolytope:
    """Lattice polytope with h* = (1, a1, a2, 0, ...)."""
    if a2 < 1:
        raise InadmissiblePairError(a1, a2, 'a_2 ≥ 1')
    if a1 < 0:
        raise InadmissiblePairError(a1, a2, 'a_1 ≥ 0')
    violation = treutlein_violation(a1, a2)
    if violation:
        raise InadmissiblePairError(a1, a2, violation)
    if (a1, a2) == (7, 1):
        return VPolytope.from_points([(0, 0), (3, 0), (0, 3)])
    if a2 < a1:
        m = a2
        l = min(a1 - a2 - 1, m + 1)
        k = a1 - a2 - 1 - l
        return VPolytope.from_points([(0, 0), (l, 0), (m + 1, 1), (0, 2), (k, 2)])
    l, m = a1, a2
    return VPolytope.from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, -l), (1, 1, m + 1)])


def stanley_symmetric_check(polytope: VPolytope) -> BoundReport:
    """g_{d-1}(P) >= 2^(d-1)/(d-1)! for centrally symmetric P."""
    if not is_centrally_symmetric(polytope):
        raise NotApplicableError("polytope is not centrally symmetric")
    d = polytope.dim
    bound = Fraction(2 ** (d - 1), factorial(d - 1))
    entries = [exact_entry(d - 1, 'stanley-symmetric', LOWER, bound, lattice_surface(polytope))]
    return BoundReport('stanley-sym', '', tuple(entries), summarize(entries))


def symmetric_pair_probe(h: HStar, symmetric: bool = True) -> BoundReport:
    """Report-only: a_i + a_(d-i) against binom(d, i) (a_d + 1). Never a failure."""
    d = h.dim
    entries = [exact_entry(i, 'symmetric-pair', LOWER, Fraction(comb(d, i) * (h[d] + 1)),
                           Fraction(h[i] + h[d - i]))
               for i in range(1, d)]
    below = [e.index for e in entries if e.verdict == Verdict.VIOLATED]
    if below:
        logger.info(f"pair probe: a_i + a_(d-i) below binom(d,i)(a_d+1) at {below} for h*={h.coeffs}")
    notes = {'hypothesis': 'symmetric' if symmetric else 'not-symmetric', 'below-at': below}
    return BoundReport('pair-probe', '', tuple(entries), Verdict.PROBE, kind='probe', notes=notes)
