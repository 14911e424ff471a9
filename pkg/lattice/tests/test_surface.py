from fractions import Fraction
from math import factorial

import mpmath
import pytest
from hypothesis import given, strategies as st

from lattice.choices import Verdict
from lattice.ehrhart import ehrhart_poly
from lattice.exceptions import DegeneratePolytopeError
from lattice.polytope import (Box, CrossOdd, CrossPolytope, Join, S, StdSimplex, SymCube, T, VPolytope, build,
                              random_corpus, random_cross_generators)
from lattice.surface import (SqrtSum, compare, cross_surface_minimum, euclid_surface, facet_areas, iso_ratio_check,
                             lattice_surface, minkowski_relation, normal_norm_sum, surface_minimum_check,
                             simplex_surface_minimum)

terms = st.lists(
    st.tuples(st.fractions(min_value=0, max_value=10, max_denominator=12), st.integers(min_value=1, max_value=200)),
    max_size=5,
)


@pytest.mark.unit
class TestSqrtSum:
    def test_square_factors_are_extracted(self):
        assert SqrtSum(((Fraction(1), 12),)).terms == ((Fraction(2), 3),)
        assert SqrtSum(((Fraction(1, 2), 4), (Fraction(1, 2), 1))).terms == ((Fraction(3, 2), 1),)

    def test_terms_sorted_and_merged(self):
        s = SqrtSum(((Fraction(1), 5), (Fraction(1), 2), (Fraction(2), 8)))
        assert s.terms == ((Fraction(5), 2), (Fraction(1), 5))
        assert str(s) == '5*sqrt(2) + 1*sqrt(5)'

    def test_negative_coefficients_rejected(self):
        with pytest.raises(ValueError):
            SqrtSum(((Fraction(-1), 2),))

    @given(terms)
    def test_canonicalization_is_idempotent(self, raw):
        s = SqrtSum(tuple(raw))
        assert SqrtSum(s.terms) == s

    @pytest.mark.parametrize('d', range(2, 7))
    def test_simplex_minimum_evaluates(self, d):
        expected = (mpmath.mpf(d) + mpmath.sqrt(d)) / factorial(d - 1)
        assert abs(simplex_surface_minimum(d).evaluate() - expected) < mpmath.mpf('1e-12')

    def test_rational_collapse(self):
        assert simplex_surface_minimum(4) == SqrtSum.rational(Fraction(1))
        assert simplex_surface_minimum(4).is_rational()

    def test_json(self):
        assert cross_surface_minimum(3).to_json() == [{'q': '4', 'n': 3}]

    def test_compare(self):
        root_two = SqrtSum(((Fraction(1), 2),))
        assert compare(root_two, SqrtSum.rational(Fraction(3, 2))) == -1
        assert compare(root_two.scale(Fraction(2)), root_two) == 1
        assert compare(root_two, SqrtSum(((Fraction(1, 2), 8),))) == 0


@pytest.mark.unit
class TestFacetAreas:
    @pytest.mark.parametrize('d', range(2, 6))
    def test_standard_simplex(self, d):
        areas = facet_areas(build(StdSimplex(d)))
        assert len(areas) == d + 1
        assert all(f.lattice_area == Fraction(1, factorial(d - 1)) and f.k == 1 for f in areas)
        slanted = next(f for f in areas if f.facet.normal == (1,) * d)
        assert slanted.euclid_area == SqrtSum(((Fraction(1, factorial(d - 1)), d),))

    @pytest.mark.parametrize('d', range(2, 5))
    def test_cross_polytope(self, d):
        areas = facet_areas(build(CrossPolytope(d)))
        assert len(areas) == 2 ** d
        assert all(f.lattice_area == Fraction(1, factorial(d - 1)) for f in areas)

    def test_cube_faces(self):
        areas = facet_areas(build(SymCube(3)))
        assert len(areas) == 6
        assert all(f.euclid_area == SqrtSum.rational(Fraction(4)) for f in areas)

    @pytest.mark.parametrize('expr', [T(3, 4), S(2, 3), Box(2, 3), CrossOdd(2, 3), Join(T(2, 3), S(3, 1))])
    def test_minkowski_relation(self, expr):
        areas = facet_areas(build(expr))
        assert all(f.k >= 1 for f in areas)
        assert minkowski_relation(areas) == (0,) * build(expr).dim

    @pytest.mark.slow
    @pytest.mark.parametrize('d', range(2, 6))
    def test_minkowski_relation_on_random_corpus(self, d):
        for _, p in random_corpus(d, 2, d + 3, size=40, seed=900 + d):
            areas = facet_areas(p)
            assert all(f.k >= 1 for f in areas)
            assert minkowski_relation(areas) == (0,) * d

    @pytest.mark.parametrize('expr', [StdSimplex(3), S(3, 4), T(2, 5), StdSimplex(6)])
    def test_normal_norms_of_simplices(self, expr):
        p = build(expr)
        assert normal_norm_sum(facet_areas(p)) >= 2 * p.dim

    def test_random_simplices(self):
        for _, p in random_corpus(3, 3, 4, size=10, seed=99):
            areas = facet_areas(p)
            assert minkowski_relation(areas) == (0, 0, 0)
            if len(areas) == 4:
                assert normal_norm_sum(areas) >= 6


@pytest.mark.unit
class TestLatticeSurface:
    @pytest.mark.parametrize('expr,expected', [
        (CrossPolytope(4), Fraction(4, 3)),
        (StdSimplex(4), Fraction(5, 12)),
        (SymCube(2), Fraction(4)),
    ])
    def test_examples(self, expr, expected):
        assert lattice_surface(build(expr)) == expected

    @pytest.mark.parametrize('d', range(2, 6))
    def test_symmetric_cross_polytope(self, d):
        assert lattice_surface(build(CrossPolytope(d))) == Fraction(2 ** (d - 1), factorial(d - 1))

    @pytest.mark.slow
    @pytest.mark.parametrize('d', [2, 3, 4])
    def test_matches_ehrhart_coefficient(self, d):
        for _, p in random_corpus(d, 2, d + 3, size=25, seed=7 * d):
            assert lattice_surface(p) == ehrhart_poly(p).g(d - 1)


@pytest.mark.unit
class TestEuclidSurface:
    @pytest.mark.parametrize('d', range(2, 6))
    def test_closed_forms(self, d):
        assert euclid_surface(build(StdSimplex(d))) == simplex_surface_minimum(d)
        assert euclid_surface(build(CrossPolytope(d))) == cross_surface_minimum(d)

    def test_cross_polytope_in_three_dimensions(self):
        assert euclid_surface(build(CrossPolytope(3))) == SqrtSum(((Fraction(4), 3),))

    @pytest.mark.parametrize('d', range(2, 5))
    def test_cube(self, d):
        assert euclid_surface(build(SymCube(d))) == SqrtSum.rational(Fraction(2 * d * 2 ** (d - 1)))


@pytest.mark.unit
class TestIsoperimetricRatio:
    @pytest.mark.parametrize('scale', [1, 2])
    @pytest.mark.parametrize('d', [2, 3, 4, 5])
    def test_regular_cross_polytope_is_tight(self, d, scale):
        generators = [tuple(scale if i == j else 0 for j in range(d)) for i in range(d)]
        assert iso_ratio_check(generators).verdict == Verdict.EQUALITY

    def test_skewed_generators_hold(self):
        report = iso_ratio_check([(1, 0, 0), (1, 2, 0), (0, 1, 3)])
        assert report.verdict == Verdict.HOLDS
        assert report.notes['volume'] == Fraction(8 * 6, 6)

    def test_dependent_generators(self):
        with pytest.raises(DegeneratePolytopeError):
            iso_ratio_check([(1, 0), (2, 0)])

    @pytest.mark.slow
    @pytest.mark.parametrize('d', [3, 4, 5])
    def test_random_sweep(self, d):
        for seed in range(100):
            report = iso_ratio_check(random_cross_generators(d, 2, seed=seed))
            assert report.verdict in (Verdict.HOLDS, Verdict.EQUALITY)


@pytest.mark.unit
class TestSurfaceMinimum:
    @pytest.mark.parametrize('d', range(2, 6))
    def test_equality_cases(self, d):
        symmetric = surface_minimum_check(build(CrossPolytope(d)))
        general = surface_minimum_check(build(StdSimplex(d)))
        assert symmetric.verdict == general.verdict == Verdict.EQUALITY
        assert symmetric.notes['branch'] == 'symmetric'
        assert general.notes['branch'] == 'general'

    def test_translated_simplex_is_still_equality(self):
        p = build(StdSimplex(3))
        moved = VPolytope(3, tuple(tuple(x + 1 for x in g) for g in p.generators))
        assert surface_minimum_check(moved).verdict == Verdict.EQUALITY

    @pytest.mark.parametrize('expr', [SymCube(3), Box(2, 2), T(3, 3), S(2, 4)])
    def test_strict(self, expr):
        assert surface_minimum_check(build(expr)).verdict == Verdict.HOLDS

    @pytest.mark.slow
    @pytest.mark.parametrize('d', [2, 3, 4])
    def test_random_corpus(self, d):
        for _, p in random_corpus(d, 2, d + 3, size=25, seed=d):
            assert surface_minimum_check(p).verdict in (Verdict.HOLDS, Verdict.EQUALITY)
