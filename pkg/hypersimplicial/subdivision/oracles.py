"""
    Title: Hypersimplicial Subdivisions
    Description: Exact construction and verification of hypersimplicial subdivisions of dilated hypersimplices.
    Author: Susanna
    License: MIT License
    Created: 2025

    Copyright (c) 2025 Susanna Maria Hepp

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software and associated documentation files (the "Software"), to deal
    in the Software without restriction, including without limitation the rights
    to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
    copies of the Software, and to permit persons to whom the Software is
    furnished to do so, subject to the following conditions:

    The above copyright notice and this permission notice shall be included in all
    copies or substantial portions of the Software.

    THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
    IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
    FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
    AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
    LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
    OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
    THE SOFTWARE.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from hypersimplicial.geometry.cells import (
    cell_vertices,
    contains,
    contains_by_profile,
    contains_relative_interior,
    containing_translates,
    face_vertices,
    hyperplane_level,
    intersect_cells,
    window_cells,
)
from hypersimplicial.geometry.rational import RationalPoint, format_point, frac_profile
from hypersimplicial.utils.config_loader import get_setting

logger = logging.getLogger(__name__)


@dataclass
class OracleReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {"checked": self.checked, "failures": len(self.failures), "witnesses": self.failures[:20]}


def sample_hyperplane_point(d, level, rng, denominator_bound=100, spread=3):
    """
    Random point of x_1 + ... + x_{d+1} = level with a common denominator q <= denominator_bound.

    About a third of the free coordinates are integral so boundary cases show up.
    """
    q = int(rng.integers(1, denominator_bound + 1))
    numerators = []
    for _ in range(d):
        numerator = int(rng.integers(-spread * q, spread * q + 1))
        if rng.integers(0, 3) == 0:
            numerator -= numerator % q
        numerators.append(numerator)
    numerators.append(level * q - sum(numerators))
    return RationalPoint(tuple(Fraction(numerator, q) for numerator in numerators))


def check_point_membership(point):
    """Disagreements between the membership characterizations and the lattice-window scan."""
    problems = []
    profile = frac_profile(point)
    if profile.support and not 1 <= profile.excess <= len(profile.support) - 1:
        problems.append(f"o(x)={profile.excess} out of range for |O(x)|={len(profile.support)}")

    window = window_cells(profile.floor, radius=1)
    brute_force = set()
    for cell in window:
        direct = contains(point, cell)
        if direct != contains_by_profile(point, cell, profile):
            problems.append(f"criteria disagree on {cell}")
        if direct:
            brute_force.add(cell)
    family = set(containing_translates(point))
    if family != brute_force:
        problems.append(f"containing family has {len(family)} cells, window scan found {len(brute_force)}")
    return [f"point ({format_point(point)}): {problem}" for problem in problems]


def verify_membership(samples=10000, seed=0, d_max=4, denominator_bound=None):
    """Random points in dimensions 1 .. d_max, every membership route compared against brute force."""
    if denominator_bound is None:
        denominator_bound = get_setting("verification", "denominator_bound", 100)
    rng = np.random.default_rng(seed)
    report = OracleReport(name="membership")
    for _ in range(samples):
        d = int(rng.integers(1, d_max + 1))
        level = int(rng.integers(-d, 2 * d + 1))
        point = sample_hyperplane_point(d, level, rng, denominator_bound)
        report.failures.extend(check_point_membership(point))
        report.checked += 1
    logger.info(f"Membership oracle: {report.checked} points, {len(report.failures)} disagreements")
    return report


def verify_intersection_formula(d):
    """
    Every pair of translates with v in {-1, 0, 1}^{d+1}: the intersection face
    against the common vertices, in both argument orders.
    """
    cells = window_cells(tuple([0] * (d + 1)), radius=1)
    vertices = [cell_vertices(cell) for cell in cells]
    report = OracleReport(name=f"intersections d={d}")
    for a, b in itertools.combinations_with_replacement(range(len(cells)), 2):
        common = vertices[a] & vertices[b]
        for first, second in ((a, b), (b, a)):
            face = intersect_cells(cells[first], cells[second])
            found = frozenset() if face.is_empty else face_vertices(face)
            if found != common:
                report.failures.append(f"{cells[first]} and {cells[second]}: face has {len(found)} vertices, expected {len(common)}")
        report.checked += 1
    logger.info(f"Intersection formula for d={d}: {report.checked} pairs, {len(report.failures)} mismatches")
    return report


def verify_hyperplane_tiling(d, level, samples=1000, seed=0, denominator_bound=None):
    """
    Lattice translates v + Delta(d, j) with sum(v) + j = level cover the hyperplane sum(x) = level
    without overlapping: each sampled point has a non-empty containing family and lies in the
    relative interior of at most one translate, exactly one when no coordinate is integral.
    """
    if denominator_bound is None:
        denominator_bound = get_setting("verification", "denominator_bound", 100)
    rng = np.random.default_rng(seed)
    report = OracleReport(name=f"tiling d={d} level={level}")
    for _ in range(samples):
        point = sample_hyperplane_point(d, level, rng, denominator_bound)
        family = containing_translates(point)
        label = f"point ({format_point(point)})"
        if not family:
            report.failures.append(f"{label} is not covered")
        for cell in family:
            if not contains(point, cell) or hyperplane_level(cell) != level:
                report.failures.append(f"{label}: {cell} does not contain it on level {level}")
        interior = [cell for cell in family if contains_relative_interior(point, cell)]
        generic = all(c.denominator != 1 for c in point.coords)
        if len(interior) > 1 or (generic and len(interior) != 1):
            report.failures.append(f"{label} lies inside {len(interior)} translates")
        report.checked += 1
    logger.info(f"Tiling of level {level} in d={d}: {report.checked} points, {len(report.failures)} failures")
    return report
