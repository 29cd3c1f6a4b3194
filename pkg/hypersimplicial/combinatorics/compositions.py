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
from functools import lru_cache

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundedComposition:
    parts: tuple[int, ...]
    bound: int
    total: int

    def __post_init__(self):
        if any(not 0 <= part <= self.bound for part in self.parts):
            raise ValueError(f"Parts {self.parts} must lie in [0, {self.bound}].")
        if sum(self.parts) != self.total:
            raise ValueError(f"Parts {self.parts} do not sum to {self.total}.")


def _check_parameters(r, d):
    if d < 1:
        raise ValueError(f"Number of parts d must be at least 1, got {d}.")
    if r < 0:
        raise ValueError(f"Part bound r must be non-negative, got {r}.")


def iter_compositions(r, d, i):
    """Yield the part tuples of compositions_bounded(r, d, i) lazily, in lexicographic order."""
    _check_parameters(r, d)
    if i < 0 or i > r * d:
        return
    yield from _compositions(r, d, i)


def _compositions(r, d, i):
    if d == 1:
        yield (i,)
        return
    # the remaining d - 1 parts can absorb at most r * (d - 1)
    for first in range(max(0, i - r * (d - 1)), min(r, i) + 1):
        for rest in _compositions(r, d - 1, i - first):
            yield (first,) + rest


def compositions_bounded(r, d, i):
    """
    Weak compositions of i into d parts, each part at most r.

    Args:
        r (int): Upper bound for every part.
        d (int): Number of parts.
        i (int): Total; out-of-range totals give an empty list.

    Returns:
        list[BoundedComposition]: Lexicographically ordered compositions.
    """
    return [BoundedComposition(parts=parts, bound=r, total=i) for parts in iter_compositions(r, d, i)]


@lru_cache(maxsize=None)
def composition_count(r, d, i):
    """C(r, d, i) by dynamic programming over the parts, without enumeration."""
    _check_parameters(r, d)
    if i < 0 or i > r * d:
        return 0

    # ways[s] = compositions of s into the parts seen so far
    ways = [1] + [0] * i
    for _ in range(d):
        prefix = list(itertools.accumulate(ways, initial=0))
        ways = [prefix[s + 1] - prefix[max(0, s - r)] for s in range(i + 1)]
    return ways[i]
