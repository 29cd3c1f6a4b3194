from fractions import Fraction

import pytest

from hypersimplicial.combinatorics.eulerian import eulerian
from hypersimplicial.subdivision.ehrhart import (
    ehrhart_normalized_volume,
    ehrhart_polynomial,
    ehrhart_samples,
    lattice_point_count,
)


@pytest.mark.parametrize("d, i, n, expected", [(2, 1, 2, 6), (3, 2, 3, 44), (4, 2, 0, 1), (3, 1, 1, 4)])
def test_lattice_point_count(d, i, n, expected):
    assert lattice_point_count(d, i, n) == expected


def test_lattice_point_count_rejects_negative_dilation():
    with pytest.raises(ValueError):
        lattice_point_count(3, 1, -1)


def test_ehrhart_samples_of_octahedral_slice():
    assert [sample.count for sample in ehrhart_samples(3, 2)] == [1, 6, 19, 44]


@pytest.mark.parametrize("d, i, expected", [(2, 1, 1), (3, 2, 4), (4, 1, 1), (4, 2, 11)])
def test_ehrhart_volume_examples(d, i, expected):
    assert ehrhart_normalized_volume(d, i) == expected


@pytest.mark.parametrize("d", range(1, 6))
def test_ehrhart_volume_matches_eulerian_numbers(d):
    for i in range(1, d + 1):
        assert ehrhart_normalized_volume(d, i) == eulerian(d, i)


def test_ehrhart_polynomial_of_triangle():
    assert ehrhart_polynomial(2, 1) == [Fraction(1), Fraction(3, 2), Fraction(1, 2)]


@pytest.mark.parametrize("d, i", [(2, 1), (3, 2), (4, 2), (5, 3)])
def test_ehrhart_polynomial_predicts_larger_dilations(d, i):
    coefficients = ehrhart_polynomial(d, i)
    for n in range(d + 1, d + 5):
        value = sum(coefficient * n**power for power, coefficient in enumerate(coefficients))
        assert value == lattice_point_count(d, i, n)
