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

import json
import logging
from collections import Counter
from dataclasses import dataclass

from hypersimplicial.combinatorics.compositions import composition_count, iter_compositions
from hypersimplicial.combinatorics.eulerian import eulerian
from hypersimplicial.combinatorics.identity_main import check_identity_parameters
from hypersimplicial.geometry.cells import Cell, contains, require_integer, unit_vector
from hypersimplicial.geometry.rational import format_point, frac_profile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Subdivision:
    """The family H(r, d, i) of hypersimplex translates subdividing r * Delta(d, i)."""

    r: int
    d: int
    i: int
    cells: tuple[Cell, ...]

    def level_counts(self):
        return Counter(cell.j for cell in self.cells)

    def to_dict(self):
        return {"r": self.r, "d": self.d, "i": self.i, "cells": [cell.to_dict() for cell in self.cells]}

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data):
        """Rebuild from the JSON form; membership of the cells is left to verify_cells."""
        try:
            r, d, i = (require_integer(data[key], f"Parameter {key}") for key in ("r", "d", "i"))
            cells = tuple(Cell.from_dict(item) for item in data["cells"])
        except (KeyError, TypeError) as e:
            raise ValueError(f"Malformed subdivision document: {e}") from e
        check_identity_parameters(r, d, i)
        for cell in cells:
            if cell.d != d:
                raise ValueError(f"Cell {cell} does not live in dimension {d}.")
        return cls(r=r, d=d, i=i, cells=cells)


def subdivision_cell_count(r, d, i):
    check_identity_parameters(r, d, i)
    return sum(composition_count(r - 1, d + 1, i * r - j) for j in range(1, d + 1))


def build_subdivision(r, d, i):
    """
    Enumerate H(r, d, i) = union over j of {v + Delta(d, j) : v in C(r-1, d+1, ir-j)}.

    Cells come ordered by level j, then lexicographically by v.
    """
    check_identity_parameters(r, d, i)
    cells = tuple(Cell(v=v, j=j) for j in range(1, d + 1) for v in iter_compositions(r - 1, d + 1, i * r - j))
    logger.info(f"Built H({r},{d},{i}) with {len(cells)} cells")
    return Subdivision(r=r, d=d, i=i, cells=cells)


def is_member(cell, r, d, i):
    """Whether the cell belongs to H(r, d, i)."""
    return (
        cell.d == d
        and 1 <= cell.j <= d
        and all(0 <= part <= r - 1 for part in cell.v)
        and sum(cell.v) == i * r - cell.j
    )


def in_dilated_hypersimplex(point, r, i):
    return point.coordinate_sum() == i * r and all(0 <= c <= r for c in point.coords)


def covering_witness(point, r, d, i):
    """
    A cell of H(r, d, i) containing the point.

    Integral points use S = {t : x_t = r}, or the smallest positive coordinate
    when no coordinate reaches r, and return x - e_S at level |S|. Otherwise
    P = {t outside O(x) : x_t = r} and the cell is floor(x) - e_P at level |P| + o(x).
    Every coordinate equal to r has to be lowered, or the translation leaves
    C(r-1, d+1, ir-j).

    Args:
        point (RationalPoint): Point of r * Delta(d, i).
        r, d, i (int): Subdivision parameters.

    Returns:
        Cell: The witness.
    """
    check_identity_parameters(r, d, i)
    if point.d != d:
        raise ValueError(f"Point ({format_point(point)}) is not in dimension {d}.")
    if not in_dilated_hypersimplex(point, r, i):
        raise ValueError(f"Point ({format_point(point)}) lies outside {r}*Delta({d},{i}).")

    profile = frac_profile(point)
    size = len(point)
    if not profile.support:
        chosen = {t for t in range(size) if point[t] == r}
        if not chosen:
            chosen = {min(t for t in range(size) if point[t] > 0)}
        base, level = profile.floor, len(chosen)
    else:
        chosen = {t for t in range(size) if t not in profile.support and point[t] == r}
        base, level = profile.floor, len(chosen) + profile.excess

    cell = Cell(v=tuple(b - e for b, e in zip(base, unit_vector(size, chosen))), j=level)
    logger.debug(f"Witness for ({format_point(point)}) is {cell}")
    return cell


def subdivision_volume(subdivision):
    """Normalized volume of the union: sum of A(d, j) over the cells."""
    return sum(eulerian(subdivision.d, cell.j) for cell in subdivision.cells)


def reflect_cell(cell, r):
    """Image of v + Delta(d, j) under x -> r*1 - x, which is ((r-1)*1 - v) + Delta(d, d+1-j)."""
    return Cell(v=tuple(r - 1 - part for part in cell.v), j=cell.d + 1 - cell.j)


def reflect_subdivision(subdivision):
    """The reflected family; as a set of cells it equals H(r, d, d+1-i)."""
    cells = sorted((reflect_cell(cell, subdivision.r) for cell in subdivision.cells), key=lambda cell: cell.sort_key)
    return Subdivision(r=subdivision.r, d=subdivision.d, i=subdivision.d + 1 - subdivision.i, cells=tuple(cells))


def witness_is_valid(point, cell, r, d, i):
    return is_member(cell, r, d, i) and contains(point, cell)
