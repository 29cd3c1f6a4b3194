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
from dataclasses import dataclass

import numpy as np

from hypersimplicial.geometry.rational import frac_profile

logger = logging.getLogger(__name__)


def require_integer(value, name):
    """Return value as an int, or raise ValueError for bools, floats (1.0 included) and other non-integers."""
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ValueError(f"{name} must be an integer, got {value!r}.")
    return int(value)


def unit_vector(size, subset):
    """Characteristic vector e_T of the index set T in Z^size."""
    return tuple(1 if t in subset else 0 for t in range(size))


def _add(u, w):
    return tuple(a + b for a, b in zip(u, w))


def _sub(u, w):
    return tuple(a - b for a, b in zip(u, w))


@dataclass(frozen=True)
class Cell:
    """The hypersimplex translate v + Delta(d, j)."""

    v: tuple[int, ...]
    j: int

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(require_integer(x, "Translation coordinate") for x in self.v))
        object.__setattr__(self, "j", require_integer(self.j, "Level"))
        if len(self.v) < 2:
            raise ValueError(f"Translation {self.v} needs at least 2 coordinates.")
        if not 1 <= self.j <= self.d:
            raise ValueError(f"Level j={self.j} outside [1, {self.d}] for translation {self.v}.")

    @property
    def d(self):
        return len(self.v) - 1

    @property
    def sort_key(self):
        return (self.j, self.v)

    def to_dict(self):
        return {"v": list(self.v), "j": self.j}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(v=tuple(data["v"]), j=data["j"])
        except (KeyError, TypeError) as e:
            raise ValueError(f"Malformed cell {data!r}: {e}") from e

    def __str__(self):
        return f"v=({','.join(map(str, self.v))});j={self.j}"


@dataclass(frozen=True)
class Face:
    """
    base + conv{e_T : T subset of free, |T| = k}.

    The empty face is the distinguished value EMPTY_FACE (no base).
    """

    base: tuple[int, ...]
    free: frozenset[int]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "free", frozenset(self.free))
        if self.base and not 0 <= self.k <= len(self.free):
            raise ValueError(f"Face level k={self.k} outside [0, {len(self.free)}].")

    @property
    def is_empty(self):
        return not self.base

    @property
    def dimension(self):
        if self.is_empty:
            return -1
        if 0 < self.k < len(self.free):
            return len(self.free) - 1
        return 0

    def to_dict(self):
        if self.is_empty:
            return None
        return {"base": list(self.base), "free": sorted(self.free), "k": self.k}


EMPTY_FACE = Face(base=(), free=frozenset(), k=0)


def _check_ambient(*dimensions):
    if len(set(dimensions)) > 1:
        raise ValueError(f"Ambient dimension mismatch: {dimensions}.")


def hyperplane_level(cell):
    """The i with cell contained in x_1 + ... + x_{d+1} = i."""
    return sum(cell.v) + cell.j


def contains(point, cell):
    """Membership by the H-description: sum(x - v) = j and 0 <= x_t - v_t <= 1."""
    _check_ambient(len(point), len(cell.v))
    # x = numerators / q, so everything is scaled by q and stays integral
    numerators, q = point.scaled
    total = 0
    for n, v in zip(numerators, cell.v):
        part = n - q * v
        if part < 0 or part > q:
            return False
        total += part
    return total == q * cell.j


def contains_by_profile(point, cell, profile=None):
    """
    Membership by the fractional-part criterion.

    (i) positive fractional part at t forces v_t = floor(x_t); integral
    coordinates need x_t - v_t in {0, 1}; (ii) the number of t with
    x_t = v_t + 1 plus o(x) equals j.

    Args:
        point (RationalPoint): Point on an integral hyperplane.
        cell (Cell): Candidate translate.
        profile (FracProfile): frac_profile(point), when the caller already has it.

    Returns:
        bool: Whether the translate contains the point.
    """
    _check_ambient(len(point), len(cell.v))
    if profile is None:
        profile = frac_profile(point)
    numerators, q = point.scaled
    upper = 0
    for t, (n, v) in enumerate(zip(numerators, cell.v)):
        if t in profile.support:
            if v != profile.floor[t]:
                return False
        elif n == q * (v + 1):
            upper += 1
        elif n != q * v:
            return False
    return upper + profile.excess == cell.j


def contains_relative_interior(point, cell):
    _check_ambient(len(point), len(cell.v))
    numerators, q = point.scaled
    total = 0
    for n, v in zip(numerators, cell.v):
        part = n - q * v
        if part <= 0 or part >= q:
            return False
        total += part
    return total == q * cell.j


def containing_translates(point):
    """
    Every lattice translate v + Delta(d, j) containing the point.

    These are floor(x) - e_T + Delta(d, |T| + o(x)) for T avoiding O(x), kept
    when the level |T| + o(x) lies in [d].

    Returns:
        list[Cell]: Sorted by (j, v).
    """
    profile = frac_profile(point)
    size = len(point)
    integral = [t for t in range(size) if t not in profile.support]
    cells = []
    for count in range(len(integral) + 1):
        level = count + profile.excess
        if not 1 <= level <= point.d:
            continue
        for subset in itertools.combinations(integral, count):
            cells.append(Cell(v=_sub(profile.floor, unit_vector(size, subset)), j=level))
    return sorted(cells, key=lambda cell: cell.sort_key)


def window_cells(center, radius=1):
    """All lattice translates with v in the box center +/- radius, every level j."""
    size = len(center)
    offsets = itertools.product(range(-radius, radius + 1), repeat=size)
    translations = (_add(center, offset) for offset in offsets)
    return [Cell(v=v, j=j) for v in translations for j in range(1, size)]


def intersect_cells(first, second):
    """
    Intersection of u + Delta(d, j1) and v + Delta(d, j2) as a common face.

    With X_u = {t : v_t = u_t + 1} and X_v = {t : u_t = v_t + 1} the
    intersection is u + e_{X_u} + conv{e_T : T subset of the rest, |T| = j1 - |X_u|}.

    Returns:
        Face: EMPTY_FACE when the translates are disjoint.
    """
    _check_ambient(first.d, second.d)
    u, v = first.v, second.v
    if any(abs(a - b) >= 2 for a, b in zip(u, v)):
        return EMPTY_FACE
    if hyperplane_level(first) != hyperplane_level(second):
        return EMPTY_FACE

    size = len(u)
    x_u = {t for t in range(size) if v[t] == u[t] + 1}
    x_v = {t for t in range(size) if u[t] == v[t] + 1}
    free = frozenset(range(size)) - x_u - x_v
    k = first.j - len(x_u)
    if not 0 <= k <= len(free):
        return EMPTY_FACE
    return Face(base=_add(u, unit_vector(size, x_u)), free=free, k=k)


def face_vertices(face):
    if face.is_empty:
        raise ValueError("The empty face has no vertices.")
    size = len(face.base)
    return frozenset(
        _add(face.base, unit_vector(size, subset)) for subset in itertools.combinations(sorted(face.free), face.k)
    )


def cell_vertices(cell):
    size = len(cell.v)
    return frozenset(_add(cell.v, unit_vector(size, subset)) for subset in itertools.combinations(range(size), cell.j))


def cell_as_face(cell):
    return Face(base=cell.v, free=frozenset(range(len(cell.v))), k=cell.j)


def cell_facets(cell):
    """
    Facets of v + Delta(d, j), first kind then second kind.

    First kind v + e_t + Delta over [d+1] minus t at level j - 1 (needs j >= 2),
    second kind v + Delta over [d+1] minus t at level j (needs j <= d - 1).
    For d = 1 the two facets are the segment endpoints v + e_t, which the first
    kind already lists.
    """
    size = len(cell.v)
    everything = frozenset(range(size))
    facets = []
    if cell.j >= 2 or cell.d == 1:
        facets.extend(
            Face(base=_add(cell.v, unit_vector(size, {t})), free=everything - {t}, k=cell.j - 1) for t in range(size)
        )
    if cell.j <= cell.d - 1:
        facets.extend(Face(base=cell.v, free=everything - {t}, k=cell.j) for t in range(size))
    return facets


def affine_dimension(points):
    """Dimension of the affine hull of integer points, by numpy rank of the difference vectors."""
    points = sorted(points)
    if not points:
        return -1
    if len(points) == 1:
        return 0
    origin = np.array(points[0], dtype=np.int64)
    differences = np.array(points[1:], dtype=np.int64) - origin
    return int(np.linalg.matrix_rank(differences))
