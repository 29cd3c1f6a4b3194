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
from dataclasses import dataclass
from fractions import Fraction

from hypersimplicial.combinatorics.compositions import composition_count
from hypersimplicial.combinatorics.identity_main import check_identity_parameters

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EhrhartSample:
    n: int
    count: int


def lattice_point_count(d, i, n):
    """Lattice points of n * Delta(d, i): integer x with sum n*i and 0 <= x_t <= n."""
    check_identity_parameters(1, d, i)
    if n < 0:
        raise ValueError(f"Dilation n must be non-negative, got {n}.")
    return composition_count(n, d + 1, n * i)


def ehrhart_samples(d, i):
    return [EhrhartSample(n=n, count=lattice_point_count(d, i, n)) for n in range(d + 1)]


def _forward_differences(values):
    """Leading entries Delta^k p(0), k = 0 .. len(values) - 1."""
    leading = []
    row = list(values)
    while row:
        leading.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return leading


def ehrhart_polynomial(d, i):
    """
    Coefficients of the Ehrhart polynomial of Delta(d, i), constant term first.

    Interpolates the counts at n = 0 .. d in Newton form,
    p(n) = sum_k Delta^k p(0) * binomial(n, k), and expands it exactly.
    """
    counts = [sample.count for sample in ehrhart_samples(d, i)]
    coefficients = [Fraction(0)] * (d + 1)
    falling = [Fraction(1)]  # n (n-1) ... (n-k+1), constant term first
    for k, difference in enumerate(_forward_differences(counts)):
        scale = Fraction(difference, math.factorial(k))
        for power, coefficient in enumerate(falling):
            coefficients[power] += scale * coefficient
        # multiply by (n - k)
        falling = [Fraction(0)] + falling
        for power in range(len(falling) - 1):
            falling[power] -= k * falling[power + 1]
    return coefficients


def ehrhart_normalized_volume(d, i):
    """
    d! times the leading Ehrhart coefficient of Delta(d, i).

    The leading coefficient is the d-th finite difference of the counts
    divided by d!, computed exactly.

    Raises:
        ArithmeticError: If the result is not a positive integer.
    """
    counts = [sample.count for sample in ehrhart_samples(d, i)]
    leading_coefficient = Fraction(_forward_differences(counts)[d], math.factorial(d))
    volume = leading_coefficient * math.factorial(d)
    if volume.denominator != 1 or volume <= 0:
        raise ArithmeticError(f"Normalized volume of Delta({d},{i}) came out as {volume}; counts were {counts}.")
    logger.debug(f"Ehrhart counts of Delta({d},{i}): {counts}, volume {volume}")
    return int(volume)
