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
import math
from dataclasses import dataclass
from functools import lru_cache

from hypersimplicial.utils.config_loader import get_setting

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EulerianTable:
    """Row d of the Eulerian triangle; row[i - 1] holds A(d, i)."""

    d: int
    row: tuple[int, ...]

    def is_valid(self):
        return (
            len(self.row) == self.d
            and sum(self.row) == math.factorial(self.d)
            and self.row == self.row[::-1]
            and all(entry > 0 for entry in self.row)
        )


def _check_dimension(d):
    if d < 1:
        raise ValueError(f"Dimension d must be at least 1, got {d}.")


@lru_cache(maxsize=None)
def _eulerian_row(d):
    row = (1,)
    for n in range(2, d + 1):
        # A(n, i) = i * A(n - 1, i) + (n - i + 1) * A(n - 1, i - 1)
        padded = (0,) + row + (0,)
        row = tuple(i * padded[i] + (n - i + 1) * padded[i - 1] for i in range(1, n + 1))
    return row


def eulerian_table(d):
    _check_dimension(d)
    return EulerianTable(d=d, row=_eulerian_row(d))


def eulerian(d, i):
    """
    Eulerian number A(d, i): permutations of [d] with exactly i - 1 descents.

    Args:
        d (int): Size of the permuted set, at least 1.
        i (int): Descent class; any integer is accepted.

    Returns:
        int: A(d, i), or 0 when i lies outside [d].
    """
    _check_dimension(d)
    if not 1 <= i <= d:
        return 0
    return _eulerian_row(d)[i - 1]


def descents(perm):
    return sum(1 for a, b in itertools.pairwise(perm) if a > b)


def descent_class(d, j):
    """
    All permutations of [d] with exactly j - 1 descents, in lexicographic order.

    Brute force over d! permutations; only meant as an oracle for eulerian().
    """
    _check_dimension(d)
    cap = get_setting("limits", "descent_class_cap", 9)
    if d > cap:
        raise ValueError(f"descent_class enumerates {d}! permutations; refusing d > {cap}.")
    return [perm for perm in itertools.permutations(range(1, d + 1)) if descents(perm) == j - 1]
