import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypersimplicial.geometry.cells import (
    EMPTY_FACE,
    Cell,
    Face,
    affine_dimension,
    cell_as_face,
    cell_facets,
    cell_vertices,
    containing_translates,
    contains,
    contains_by_profile,
    face_vertices,
    intersect_cells,
    window_cells,
)
from hypersimplicial.geometry.rational import (
    RationalPoint,
    format_point,
    frac_profile,
    parse_point,
    parse_rational,
)
from hypersimplicial.subdivision.oracles import check_point_membership, verify_intersection_formula


def point(*coords):
    return RationalPoint(tuple(Fraction(c) for c in coords))


def test_parse_rational():
    assert parse_rational("3") == 3
    assert parse_rational("-6/4") == Fraction(-3, 2)
    assert parse_rational(" 1/2 ") == Fraction(1, 2)


@pytest.mark.parametrize("text", ["0.5", "1/0", "1/-2", "a", "", "1/2/3"])
def test_parse_rational_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_parse_and_format_point():
    x = parse_point("1/2,1/2,1,0")
    assert x.d == 3
    assert x.coords == (Fraction(1, 2), Fraction(1, 2), Fraction(1), Fraction(0))
    assert format_point(x) == "1/2,1/2,1,0"


def test_point_needs_two_coordinates():
    with pytest.raises(ValueError):
        parse_point("1")


def test_frac_profile_examples():
    profile = frac_profile(point(Fraction(1, 2), Fraction(1, 2), 1, 0))
    assert profile == (frozenset({0, 1}), 1, (0, 0, 1, 0))

    profile = frac_profile(point(2, 0, 0, 0))
    assert profile == (frozenset(), 0, (2, 0, 0, 0))

    third = Fraction(1, 3)
    profile = frac_profile(point(third, third, third, 1))
    assert profile == (frozenset({0, 1, 2}), 1, (0, 0, 0, 1))


def test_frac_profile_handles_negative_coordinates():
    profile = frac_profile(point(Fraction(-1, 2), Fraction(3, 2), 0))
    assert profile == (frozenset({0, 1}), 1, (-1, 1, 0))


def test_frac_profile_rejects_non_integral_sum():
    with pytest.raises(ValueError):
        frac_profile(point(Fraction(1, 2), 0, 0))


def test_contains_examples():
    x = point(Fraction(1, 2), Fraction(1, 2), 1, 0)
    assert contains(x, Cell(v=(0, 0, 1, 0), j=1))
    assert contains(x, Cell(v=(0, 0, 0, 0), j=2))
    assert not contains(point(2, 0, 0, 0), Cell(v=(0, 0, 0, 0), j=2))


def test_profile_criterion_uses_fractional_sum():
    # counting |O(x)| instead of o(x) would demand level 2 here
    x = point(Fraction(1, 2), Fraction(1, 2), 1, 0)
    cell = Cell(v=(0, 0, 1, 0), j=1)
    assert contains(x, cell)
    assert contains_by_profile(x, cell)
    assert not contains_by_profile(x, Cell(v=(0, 0, 1, 0), j=2))


def test_contains_rejects_dimension_mismatch():
    with pytest.raises(ValueError):
        contains(point(1, 0, 0), Cell(v=(0, 0, 0, 0), j=1))


def test_cell_validates_level():
    with pytest.raises(ValueError):
        Cell(v=(0, 0, 0), j=3)
    with pytest.raises(ValueError):
        Cell(v=(0, 0, 0), j=0)


@pytest.mark.parametrize(
    "v, j",
    [
        ((0.4, 0.7, 1.2), 1),
        ((0, 0, 1), 1.9),
        ((0.0, 0, 1), 1),
        ((0, 0, 1), 1.0),
        ((True, 0, 0), 1),
        (("0", 0, 0), 1),
    ],
)
def test_cell_rejects_non_integer_entries(v, j):
    with pytest.raises(ValueError):
        Cell(v=v, j=j)


def test_cell_from_dict_does_not_truncate():
    with pytest.raises(ValueError):
        Cell.from_dict({"v": [0.4, 0.7, 1.2], "j": 1.9})
    assert Cell.from_dict({"v": [0, 0, 1], "j": 1}) == Cell(v=(0, 0, 1), j=1)


def test_profile_criterion_with_precomputed_profile():
    x = point(Fraction(3, 2), Fraction(1, 2), 0, 0)
    profile = frac_profile(x)
    for cell in window_cells(profile.floor):
        assert contains_by_profile(x, cell, profile) == contains_by_profile(x, cell) == contains(x, cell)


def test_containing_translates_examples():
    x = point(Fraction(1, 2), Fraction(1, 2), 1, 0)
    assert set(containing_translates(x)) == {
        Cell(v=(0, 0, 1, 0), j=1),
        Cell(v=(0, 0, 0, 0), j=2),
        Cell(v=(0, 0, 1, -1), j=2),
        Cell(v=(0, 0, 0, -1), j=3),
    }

    family = containing_translates(point(1, 0, 0, 0))
    assert len(family) == 14
    assert family == sorted(family, key=lambda cell: cell.sort_key)

    third = Fraction(1, 3)
    assert set(containing_translates(point(third, third, third, 0))) == {
        Cell(v=(0, 0, 0, 0), j=1),
        Cell(v=(0, 0, 0, -1), j=2),
    }


@st.composite
def hyperplane_points(draw, d_max=4):
    d = draw(st.integers(1, d_max))
    q = draw(st.integers(1, 100))
    numerators = draw(st.lists(st.integers(-3 * q, 3 * q), min_size=d, max_size=d))
    level = draw(st.integers(-d, 2 * d))
    numerators.append(level * q - sum(numerators))
    return RationalPoint(tuple(Fraction(n, q) for n in numerators))


@pytest.mark.property_based
@given(hyperplane_points())
@settings(max_examples=200, deadline=None)
def test_membership_routes_agree_with_window_scan(x):
    assert check_point_membership(x) == []


@pytest.mark.property_based
@given(hyperplane_points())
@settings(max_examples=200, deadline=None)
def test_fractional_sum_bounds(x):
    profile = frac_profile(x)
    if profile.support:
        assert 1 <= profile.excess <= len(profile.support) - 1
    else:
        assert profile.excess == 0


def test_intersect_examples():
    face = intersect_cells(Cell(v=(0, 0, 0), j=2), Cell(v=(1, 0, 0), j=1))
    assert face == Face(base=(1, 0, 0), free=frozenset({1, 2}), k=1)
    assert face_vertices(face) == {(1, 1, 0), (1, 0, 1)}
    assert face.dimension == 1

    cell = Cell(v=(0, 0, 0, 0), j=2)
    assert intersect_cells(cell, cell) == cell_as_face(cell)

    face = intersect_cells(Cell(v=(0, 0, 0), j=1), Cell(v=(2, 0, 0), j=1))
    assert face.is_empty
    assert face.dimension == -1


def test_intersect_different_hyperplanes_is_empty():
    assert intersect_cells(Cell(v=(0, 0, 0), j=1), Cell(v=(0, 0, 0), j=2)).is_empty


def test_face_vertices_examples():
    assert face_vertices(Face(base=(0, 0, 0), free=frozenset({0, 1, 2}), k=0)) == {(0, 0, 0)}
    assert face_vertices(Face(base=(0, 0, 0), free=frozenset({0, 1, 2}), k=3)) == {(1, 1, 1)}
    with pytest.raises(ValueError):
        face_vertices(EMPTY_FACE)


def test_cell_vertices_examples():
    assert cell_vertices(Cell(v=(0, 0, 0), j=1)) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert cell_vertices(Cell(v=(0, 0, 0, 0), j=2)) == {
        tuple(1 if t in subset else 0 for t in range(4)) for subset in itertools.combinations(range(4), 2)
    }
    assert cell_vertices(Cell(v=(1, 0, 0), j=2)) == {(2, 1, 0), (2, 0, 1), (1, 1, 1)}


@pytest.mark.parametrize("d", range(1, 6))
def test_cell_facets_count_and_dimension(d):
    for j in range(1, d + 1):
        cell = Cell(v=tuple(range(d + 1)), j=j)
        facets = cell_facets(cell)
        assert len(facets) == (d + 1 if j in (1, d) else 2 * (d + 1))
        vertices = cell_vertices(cell)
        for facet in facets:
            facet_points = face_vertices(facet)
            assert facet_points <= vertices
            assert facet.dimension == d - 1
            assert affine_dimension(facet_points) == d - 1
        assert affine_dimension(vertices) == d


def test_cell_facets_examples():
    triangle = cell_facets(Cell(v=(0, 0, 0), j=1))
    assert {face_vertices(facet) for facet in triangle} == {
        frozenset({(0, 1, 0), (0, 0, 1)}),
        frozenset({(1, 0, 0), (0, 0, 1)}),
        frozenset({(1, 0, 0), (0, 1, 0)}),
    }
    assert len(cell_facets(Cell(v=(0, 0, 0, 0), j=2))) == 8
    segment = cell_facets(Cell(v=(0, 0), j=1))
    assert {face_vertices(facet) for facet in segment} == {frozenset({(1, 0)}), frozenset({(0, 1)})}


def test_face_property_in_small_window():
    cells = window_cells((0, 0, 0), radius=1)
    assert len(cells) == 27 * 2
    for first, second in itertools.product(cells, repeat=2):
        face = intersect_cells(first, second)
        common = cell_vertices(first) & cell_vertices(second)
        assert (frozenset() if face.is_empty else face_vertices(face)) == common


@pytest.mark.parametrize("d", [1, 2])
def test_intersection_formula_oracle(d):
    report = verify_intersection_formula(d)
    assert report.passed, report.failures[:5]


@pytest.mark.slow
def test_intersection_formula_oracle_dimension_three():
    report = verify_intersection_formula(3)
    assert report.checked == 243 * 244 // 2
    assert report.passed, report.failures[:5]
