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

import concurrent.futures
import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial

import numpy as np

from hypersimplicial.combinatorics.eulerian import eulerian
from hypersimplicial.geometry.cells import cell_vertices, face_vertices, intersect_cells
from hypersimplicial.geometry.rational import RationalPoint, format_point
from hypersimplicial.subdivision.subdivision_main import (
    build_subdivision,
    covering_witness,
    is_member,
    subdivision_cell_count,
    witness_is_valid,
)
from hypersimplicial.utils.config_loader import get_setting

logger = logging.getLogger(__name__)

MAX_LISTED_WITNESSES = 20


@dataclass
class VerificationReport:
    r: int
    d: int
    i: int
    cell_count: int
    structure_failures: list[str] = field(default_factory=list)
    containment_failures: list[str] = field(default_factory=list)
    samples: int = 0
    coverage_failures: list[str] = field(default_factory=list)
    pairs: int = 0
    exhaustive_pairs: bool = True
    face_failures: list[str] = field(default_factory=list)
    level_counts: dict[int, int] = field(default_factory=dict)
    volume_lhs: int = 0
    volume_rhs: int = 0

    @property
    def volume_equal(self):
        return self.volume_lhs == self.volume_rhs

    @property
    def passed(self):
        return not (
            self.structure_failures or self.containment_failures or self.coverage_failures or self.face_failures
        ) and self.volume_equal

    def volume_line(self):
        terms = " + ".join(
            f"{count}·{eulerian(self.d, j)}" for j, count in sorted(self.level_counts.items())
        )
        return f"{terms or '0'} = {self.volume_lhs} = {self.r}^{self.d}·{eulerian(self.d, self.i)}"

    def to_dict(self):
        return {
            "params": {"r": self.r, "d": self.d, "i": self.i, "cells": self.cell_count},
            "checks": {
                "structure": {
                    "failures": len(self.structure_failures),
                    "witnesses": self.structure_failures[:MAX_LISTED_WITNESSES],
                },
                "containment": not self.containment_failures,
                "coverage": {
                    "samples": self.samples,
                    "failures": len(self.coverage_failures),
                    "witnesses": self.coverage_failures[:MAX_LISTED_WITNESSES],
                },
                "faces": {
                    "pairs": self.pairs,
                    "exhaustive": self.exhaustive_pairs,
                    "failures": len(self.face_failures),
                    "witnesses": self.face_failures[:MAX_LISTED_WITNESSES],
                },
                "volume": {"lhs": str(self.volume_lhs), "rhs": str(self.volume_rhs), "equal": self.volume_equal},
            },
            "passed": self.passed,
        }

    def format_lines(self):
        """Pairs of (label, ok, detail) for the text report."""
        pair_mode = "exhaustive" if self.exhaustive_pairs else "sampled"
        return [
            ("structure", not self.structure_failures, f"{self.cell_count} cells, {len(self.structure_failures)} problems"),
            ("containment", not self.containment_failures, f"{len(self.containment_failures)} cells outside"),
            ("coverage", not self.coverage_failures, f"{self.samples} samples, {len(self.coverage_failures)} failures"),
            ("faces", not self.face_failures, f"{self.pairs} {pair_mode} pairs, {len(self.face_failures)} failures"),
            ("volume", self.volume_equal, self.volume_line()),
        ]

    def witnesses(self):
        return (
            self.structure_failures + self.containment_failures + self.coverage_failures + self.face_failures
        )[:MAX_LISTED_WITNESSES]


def sample_point(r, d, i, rng, denominator_bound):
    """
    Random rational convex combination of the vertices r * e_T, |T| = i.

    The weights share a denominator q <= denominator_bound, drawn by cutting q
    into as many non-negative parts as there are vertices.
    """
    vertices = list(itertools.combinations(range(d + 1), i))
    q = int(rng.integers(1, denominator_bound + 1))
    cuts = sorted(int(cut) for cut in rng.integers(0, q + 1, size=len(vertices) - 1))
    weights = [b - a for a, b in zip([0] + cuts, cuts + [q])]

    coords = [Fraction(0)] * (d + 1)
    for weight, subset in zip(weights, vertices):
        for t in subset:
            coords[t] += Fraction(r * weight, q)
    return RationalPoint(tuple(coords))


def _check_structure(r, d, i, cells):
    failures = []
    duplicates = [cell for cell, count in Counter(cells).items() if count > 1]
    failures.extend(f"duplicate cell {cell}" for cell in duplicates)
    expected = subdivision_cell_count(r, d, i)
    if len(cells) != expected:
        failures.append(f"{len(cells)} cells, expected {expected}")
    failures.extend(f"cell {cell} is not in H({r},{d},{i})" for cell in cells if not is_member(cell, r, d, i))
    return failures


def _check_containment(r, d, i, cells):
    # vertex coordinates of v + Delta(d, j) range over v_t and v_t + 1
    return [
        f"cell {cell} leaves {r}*Delta({d},{i})"
        for cell in cells
        if any(part < 0 or part + 1 > r for part in cell.v) or sum(cell.v) + cell.j != i * r
    ]


def _check_coverage(cell_set, r, d, i, points):
    failures = []
    for point in points:
        try:
            cell = covering_witness(point, r, d, i)
        except ValueError as e:
            failures.append(f"point ({format_point(point)}): {e}")
            continue
        if not witness_is_valid(point, cell, r, d, i):
            failures.append(f"point ({format_point(point)}) not contained in witness {cell}")
        elif cell not in cell_set:
            failures.append(f"point ({format_point(point)}): witness {cell} missing from the cells")
    return failures


def _select_pairs(count, rng, pair_threshold, pair_samples):
    if count <= max(pair_threshold, 1):
        return list(itertools.combinations(range(count), 2)), True
    pairs = []
    for _ in range(pair_samples):
        a = int(rng.integers(0, count))
        b = int(rng.integers(0, count - 1))
        pairs.append((a, b + 1 if b >= a else b))
    return pairs, False


def _check_faces(d, cells, pairs):
    vertices = {}

    def vertex_set(index):
        if index not in vertices:
            vertices[index] = cell_vertices(cells[index])
        return vertices[index]

    failures = []
    for a, b in pairs:
        first, second = cells[a], cells[b]
        face = intersect_cells(first, second)
        common = vertex_set(a) & vertex_set(b)
        if face.is_empty:
            if common:
                failures.append(f"{first} and {second} share {len(common)} vertices but the face is empty")
            continue
        if face_vertices(face) != common:
            failures.append(f"face of {first} and {second} does not match their common vertices")
        elif face.dimension >= d:
            failures.append(f"{first} and {second} overlap in dimension {face.dimension}")
    return failures


def verify_cells(
    r,
    d,
    i,
    cells,
    samples=None,
    seed=0,
    pair_threshold=None,
    pair_samples=None,
    denominator_bound=None,
    workers=None,
):
    """
    Check that a list of cells subdivides r * Delta(d, i).

    Runs every check to the end and collects witnesses instead of stopping at
    the first failure. Settings left as None come from config.json.

    Args:
        r, d, i (int): Parameters of the dilated hypersimplex.
        cells (Sequence[Cell]): Candidate subdivision.
        samples (int): Random points for the coverage check.
        seed (int): Seed of the numpy generator; equal seeds give equal reports.
        pair_threshold (int): Up to this many cells every pair is checked.
        pair_samples (int): Number of random pairs above the threshold.
        denominator_bound (int): Largest denominator of the sample weights.
        workers (int): Processes for the coverage check.

    Returns:
        VerificationReport: Outcome of every check.
    """
    samples = get_setting("verification", "samples", 1000) if samples is None else samples
    pair_threshold = get_setting("verification", "pair_threshold", 500) if pair_threshold is None else pair_threshold
    pair_samples = get_setting("verification", "pair_samples", 10000) if pair_samples is None else pair_samples
    if denominator_bound is None:
        denominator_bound = get_setting("verification", "denominator_bound", 100)
    workers = get_setting("verification", "workers", 1) if workers is None else workers

    cells = list(cells)
    rng = np.random.default_rng(seed)
    report = VerificationReport(r=r, d=d, i=i, cell_count=len(cells))

    report.structure_failures = _check_structure(r, d, i, cells)
    report.containment_failures = _check_containment(r, d, i, cells)

    logger.info(f"Sampling {samples} points of {r}*Delta({d},{i})")
    points = [sample_point(r, d, i, rng, denominator_bound) for _ in range(samples)]
    cell_set = frozenset(cells)
    report.samples = len(points)
    if workers > 1 and points:
        chunk_size = math.ceil(len(points) / workers)
        chunks = [points[k : k + chunk_size] for k in range(0, len(points), chunk_size)]
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            for failures in executor.map(partial(_check_coverage, cell_set, r, d, i), chunks):
                report.coverage_failures.extend(failures)
    else:
        report.coverage_failures = _check_coverage(cell_set, r, d, i, points)

    pairs, report.exhaustive_pairs = _select_pairs(len(cells), rng, pair_threshold, pair_samples)
    logger.info(f"Checking {len(pairs)} cell pairs")
    report.pairs = len(pairs)
    report.face_failures = _check_faces(d, cells, pairs)

    report.level_counts = dict(sorted(Counter(cell.j for cell in cells).items()))
    report.volume_lhs = sum(eulerian(d, cell.j) for cell in cells)
    report.volume_rhs = r**d * eulerian(d, i)

    for witness in report.witnesses():
        logger.warning(f"H({r},{d},{i}): {witness}")
    return report


def verify_subdivision(r, d, i, samples=None, seed=0, **settings):
    """Build H(r, d, i) and run verify_cells on it."""
    subdivision = build_subdivision(r, d, i)
    return verify_cells(r, d, i, subdivision.cells, samples=samples, seed=seed, **settings)
