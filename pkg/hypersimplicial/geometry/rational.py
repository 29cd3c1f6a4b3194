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

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple

logger = logging.getLogger(__name__)

RATIONAL_PATTERN = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text):
    """Parse `a` or `a/b` with b > 0 into a Fraction in lowest terms."""
    match = RATIONAL_PATTERN.match(text.strip())
    if not match:
        raise ValueError(f"Malformed rational '{text}', expected 'a' or 'a/b'.")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ValueError(f"Zero denominator in '{text}'.")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value):
    return str(Fraction(value))


@dataclass(frozen=True)
class RationalPoint:
    """A point of R^{d+1} with exact coordinates; d is the ambient dimension."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) < 2:
            raise ValueError(f"A point needs at least 2 coordinates, got {len(self.coords)}.")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @property
    def d(self):
        return len(self.coords) - 1

    @cached_property
    def scaled(self):
        """(numerators, q): the coordinates over their least common denominator q."""
        q = math.lcm(*(c.denominator for c in self.coords))
        return tuple(c.numerator * (q // c.denominator) for c in self.coords), q

    def coordinate_sum(self):
        return sum(self.coords, Fraction(0))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def __str__(self):
        return format_point(self)


def parse_point(text):
    """Parse the comma separated point format, e.g. '1/2,1/2,1,0'."""
    return RationalPoint(tuple(parse_rational(entry) for entry in text.split(",")))


def format_point(point):
    return ",".join(format_rational(c) for c in point.coords)


class FracProfile(NamedTuple):
    support: frozenset[int]  # O(x): indices with positive fractional part
    excess: int  # o(x): sum of those fractional parts
    floor: tuple[int, ...]


def frac_profile(point):
    """
    Fractional profile of a point lying on an integral hyperplane.

    Args:
        point (RationalPoint): Point whose coordinate sum is an integer.

    Returns:
        FracProfile: (O(x), o(x), floor of x). Whenever O(x) is non-empty,
        1 <= o(x) <= |O(x)| - 1.
    """
    total = point.coordinate_sum()
    if total.denominator != 1:
        raise ValueError(f"Coordinate sum {total} of ({format_point(point)}) is not an integer.")

    floor = tuple(math.floor(c) for c in point.coords)
    fractional = [c - f for c, f in zip(point.coords, floor)]
    support = frozenset(t for t, part in enumerate(fractional) if part > 0)
    excess = sum(fractional, Fraction(0))
    # integer on an integral hyperplane
    return FracProfile(support=support, excess=int(excess), floor=floor)
