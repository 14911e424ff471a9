from fractions import Fraction
from math import factorial

import pytest

from lattice.bounds import (coefficient_upper, degree2_witness, harmonic, hibi_check, improved_volume_lower,
                            specialized_bound_report, specialized_bounds, stanley_symmetric_check, surface_lower,
                            symmetric_pair_probe, treutlein_check, treutlein_report, treutlein_violation,
                            upper_bound_report, volume_bound_report, volume_lower)
from lattice.choices import Verdict
from lattice.ehrhart import HStar, count, ehrhart_poly, hstar_from_counts
from lattice.exceptions import DimensionError, InadmissiblePairError, NotApplicableError
from lattice.polytope import (CrossOdd, CrossPolytope, S, StdSimplex, SymCube, T, UnitCube, build, random_corpus,
                              t_tilde)


def poly(expr):
    return ehrhart_poly(build(expr))


@pytest.mark.unit
class TestVolumeBound:
    def test_unimodular_simplex(self):
        assert volume_lower(3, 2, Fraction(1, 6)) == 1

    def test_out_of_range(self):
        with pytest.raises(DimensionError):
            volume_lower(2, 1, Fraction(1, 2))
        with pytest.raises(DimensionError):
            volume_lower(4, 4, Fraction(1, 24))

    @pytest.mark.slow
    @pytest.mark.parametrize('d', range(3, 7))
    @pytest.mark.parametrize('m', range(1, 6))
    def test_t_family_is_tight_one_below_the_top(self, d, m):
        p = poly(T(m, d))
        assert p.leading == Fraction(m, factorial(d))
        assert volume_lower(d, d - 2, p.leading) == p.g(d - 2)

    @pytest.mark.slow
    @pytest.mark.parametrize('d', [4, 5, 6])
    @pytest.mark.parametrize('m', range(1, 6))
    def test_pyramid_tower_is_tight_at_one_and_two(self, d, m):
        p = poly(t_tilde(m, d))
        for i in (1, 2):
            assert volume_lower(d, i, p.leading) == p.g(i)

    def test_improved_bound(self):
        d = 4
        simplex = build(StdSimplex(d))
        vol = Fraction(1, factorial(d))
        for i in range(1, d):
            assert improved_volume_lower(d, i, vol, count(simplex)) == volume_lower(d, i, vol)
        p = build(S(3, 4))
        for i in range(1, d):
            assert improved_volume_lower(d, i, Fraction(3, 24), count(p)) > volume_lower(d, i, Fraction(3, 24))

    def test_improved_bound_excludes_one_case(self):
        with pytest.raises(NotApplicableError):
            improved_volume_lower(3, 2, Fraction(1, 6), 4)

    def test_report_on_simplex(self):
        report = volume_bound_report(poly(StdSimplex(3)), 4)
        assert report.verdict in (Verdict.HOLDS, Verdict.EQUALITY)
        assert not report.violated
        # i = 2, d = 3 carries only the plain bound
        assert [(e.index, e.name) for e in report.entries] == [(1, 'volume-lower'), (1, 'improved-lower'),
                                                               (2, 'volume-lower')]


@pytest.mark.unit
class TestSpecializedBounds:
    @pytest.mark.parametrize('d', range(3, 9))
    @pytest.mark.parametrize('scaled_volume', [1, 2, 5, 17])
    def test_agrees_with_volume_bound(self, d, scaled_volume):
        vol = Fraction(scaled_volume, factorial(d))
        bounds = specialized_bounds(d, vol)
        assert set(bounds) == {i for i in (1, 2, d - 2) if 1 <= i <= d - 1}
        assert all(value == volume_lower(d, i, vol) for i, value in bounds.items())

    def test_simplex_meets_first_bound(self):
        d = 4
        assert specialized_bounds(d, Fraction(1, factorial(d)))[1] == harmonic(d) == Fraction(25, 12)
        assert poly(StdSimplex(d)).g(1) == harmonic(d)

    def test_pyramid_tower_equality(self):
        report = specialized_bound_report(poly(t_tilde(3, 5)))
        by_index = {e.index: e for e in report.entries}
        assert by_index[1].verdict == by_index[2].verdict == Verdict.EQUALITY
        assert by_index[1].slack == 0


@pytest.mark.unit
class TestUpperBound:
    def test_unit_square_is_tight(self):
        assert coefficient_upper(2, 1, Fraction(1)) == 2 == poly(UnitCube(2)).g(1)

    @pytest.mark.parametrize('d', range(2, 7))
    def test_simplices(self, d):
        report = upper_bound_report(poly(StdSimplex(d)))
        assert not report.violated

    @pytest.mark.slow
    @pytest.mark.parametrize('d', [3, 4, 5])
    def test_sandwich_on_random_corpus(self, d):
        for _, p in random_corpus(d, 2, d + 3, size=100, seed=1000 + d):
            g = ehrhart_poly(p)
            lattice_points = count(p)
            for i in range(1, d):
                assert volume_lower(d, i, g.leading) <= g.g(i) <= coefficient_upper(d, i, g.leading)
                if (i, d) != (2, 3):
                    assert improved_volume_lower(d, i, g.leading, lattice_points) <= g.g(i)


@pytest.mark.unit
class TestSurfaceLowerBound:
    @pytest.mark.parametrize('d', range(2, 6))
    def test_simplex_equality(self, d):
        assert poly(StdSimplex(d)).g(d - 1) == surface_lower(d)

    def test_value(self):
        assert surface_lower(3) == Fraction(1)

    @pytest.mark.slow
    @pytest.mark.parametrize('d', range(2, 6))
    def test_random_corpus(self, d):
        for _, p in random_corpus(d, 2, d + 3, size=40, seed=700 + d):
            assert ehrhart_poly(p).g(d - 1) >= surface_lower(d)


@pytest.mark.unit
class TestHibi:
    def test_counterexample_is_confirmed(self, hibi_counterexample):
        report = hibi_check(hstar_from_counts(hibi_counterexample))
        assert report.verdict == Verdict.COUNTEREXAMPLE_CONFIRMED
        assert report.notes == {'degree': 3, 'hypothesis': False, 'violated-at': [2]}
        assert not report.violated

    def test_cube_satisfies_hypothesis(self):
        h = hstar_from_counts(build(SymCube(3)))
        assert h.coeffs == (1, 23, 23, 1)
        report = hibi_check(h)
        assert report.notes['hypothesis'] is True
        assert report.verdict == Verdict.HOLDS

    def test_unimodular_simplex_is_vacuous(self):
        report = hibi_check(HStar(4, (1,)))
        assert report.entries == ()
        assert report.verdict == Verdict.HOLDS

    def test_violation_with_interior_point_is_flagged(self):
        report = hibi_check(HStar(3, (1, 5, 2, 1)))
        assert report.verdict == Verdict.VIOLATED
        assert report.violated


@pytest.mark.unit
class TestTreutlein:
    @pytest.mark.parametrize('a1,a2,ok', [(7, 1, True), (8, 1, False), (9, 2, True), (10, 2, False), (0, 3, True)])
    def test_examples(self, a1, a2, ok):
        assert treutlein_check(a1, a2) is ok

    def test_names_the_inequality(self):
        assert treutlein_violation(8, 1) == 'a_1 ≤ 7'
        assert treutlein_violation(16, 4) == 'a_1 ≤ 3a_2+3'

    def test_report_needs_degree_two(self):
        assert treutlein_report(HStar(3, (1, 2, 0, 1))).verdict == Verdict.NOT_APPLICABLE
        assert treutlein_report(HStar(2, (1, 7, 1))).verdict == Verdict.EQUALITY


@pytest.mark.unit
class TestDegreeTwoWitness:
    def test_triangle(self):
        p = degree2_witness(7, 1)
        assert set(p.generators) == {(0, 0), (3, 0), (0, 3)}
        assert hstar_from_counts(p).coeffs == (1, 7, 1)

    def test_three_dimensional_case(self):
        p = degree2_witness(2, 3)
        assert p.dim == 3
        assert hstar_from_counts(p).coeffs == (1, 2, 3, 0)

    def test_pentagon_case(self):
        p = degree2_witness(5, 2)
        assert p.dim == 2
        assert hstar_from_counts(p).coeffs == (1, 5, 2)

    @pytest.mark.parametrize('a2', range(1, 5))
    def test_every_admissible_pair(self, a2):
        limit = 7 if a2 == 1 else 3 * a2 + 3
        for a1 in range(0, limit + 1):
            h = hstar_from_counts(degree2_witness(a1, a2))
            assert h.coeffs[:3] == (1, a1, a2) and not any(h.coeffs[3:])

    @pytest.mark.parametrize('a1,a2,inequality', [(8, 1, 'a_1 ≤ 7'), (16, 4, 'a_1 ≤ 3a_2+3'), (3, 0, 'a_2 ≥ 1'),
                                                   (-1, 2, 'a_1 ≥ 0')])
    def test_inadmissible_pairs(self, a1, a2, inequality):
        with pytest.raises(InadmissiblePairError) as excinfo:
            degree2_witness(a1, a2)
        assert excinfo.value.inequality == inequality
        assert f'{inequality} violated' in str(excinfo.value)


@pytest.mark.unit
class TestStanleySymmetric:
    @pytest.mark.parametrize('d', range(2, 6))
    def test_cross_polytope_equality(self, d):
        report = stanley_symmetric_check(build(CrossPolytope(d)))
        assert report.verdict == Verdict.EQUALITY
        assert report.entries[0].bound == Fraction(2 ** (d - 1), factorial(d - 1))

    def test_cube(self):
        report = stanley_symmetric_check(build(SymCube(3)))
        assert report.entries[0].actual == 12
        assert report.verdict == Verdict.HOLDS

    def test_needs_symmetric_input(self):
        with pytest.raises(NotApplicableError):
            stanley_symmetric_check(build(StdSimplex(3)))

    @pytest.mark.slow
    @pytest.mark.parametrize('d', [2, 3, 4])
    def test_random_symmetric_corpus(self, d):
        for _, p in random_corpus(d, 2, d + 1, size=20, seed=d, symmetric=True):
            assert not stanley_symmetric_check(p).violated


@pytest.mark.unit
class TestConjectureProbe:
    def test_long_cross_polytope_is_tight(self):
        report = symmetric_pair_probe(hstar_from_counts(build(CrossOdd(2, 3))))
        assert report.kind == 'probe'
        assert report.verdict == Verdict.PROBE
        assert all(e.slack == 0 for e in report.entries)
        assert not report.violated

    def test_square(self):
        report = symmetric_pair_probe(hstar_from_counts(build(SymCube(2))))
        assert report.entries[0].slack == 8

    def test_below_bound_is_reported_not_failed(self):
        report = symmetric_pair_probe(HStar(3, (1, 0, 0, 0)), symmetric=False)
        assert report.notes == {'hypothesis': 'not-symmetric', 'below-at': [1, 2]}
        assert not report.violated
