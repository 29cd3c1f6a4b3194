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
import logging
from dataclasses import asdict, dataclass, field

from hypersimplicial.combinatorics.compositions import composition_count, compositions_bounded
from hypersimplicial.combinatorics.eulerian import descent_class, eulerian

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdentityResult:
    r: int
    d: int
    i: int
    lhs: int
    rhs: int

    @property
    def equal(self):
        return self.lhs == self.rhs

    def to_dict(self):
        # lhs and rhs as decimal strings
        return {"r": self.r, "d": self.d, "i": self.i, "lhs": str(self.lhs), "rhs": str(self.rhs), "equal": self.equal}


@dataclass
class SweepReport:
    d_max: int
    r_max: int
    results: list[IdentityResult] = field(default_factory=list)

    @property
    def failures(self):
        return [result for result in self.results if not result.equal]

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {
            "d_max": self.d_max,
            "r_max": self.r_max,
            "triples": len(self.results),
            "failures": len(self.failures),
            "results": [result.to_dict() for result in self.results],
        }


def check_identity_parameters(r, d, i):
    if r < 1:
        raise ValueError(f"Dilation r must be at least 1, got {r}.")
    if d < 1:
        raise ValueError(f"Dimension d must be at least 1, got {d}.")
    if not 1 <= i <= d:
        raise ValueError(f"Hypersimplex index i must lie in [1, {d}], got {i}.")


def identity_check(r, d, i):
    """
    Evaluate both sides of sum_j C(r-1, d+1, ir-j) A(d, j) = r^d A(d, i) exactly.

    Returns:
        IdentityResult: lhs, rhs and the equality flag.
    """
    check_identity_parameters(r, d, i)
    lhs = sum(composition_count(r - 1, d + 1, i * r - j) * eulerian(d, j) for j in range(1, d + 1))
    rhs = r**d * eulerian(d, i)
    return IdentityResult(r=r, d=d, i=i, lhs=lhs, rhs=rhs)


def identity_check_by_enumeration(r, d, i):
    """
    Same identity with every count taken from an explicit enumeration.

    Both sides count pairs: [r]^d x U(d, i) on the right, and the union over j of
    C(r-1, d+1, ir-j) x U(d, j) on the left.
    """
    check_identity_parameters(r, d, i)
    lhs = sum(len(compositions_bounded(r - 1, d + 1, i * r - j)) * len(descent_class(d, j)) for j in range(1, d + 1))
    rhs = r**d * len(descent_class(d, i))
    return IdentityResult(r=r, d=d, i=i, lhs=lhs, rhs=rhs)


def _check_triple(triple):
    d, i, r = triple
    return identity_check(r, d, i)


def identity_sweep(d_max, r_max, workers=1):
    """
    Run identity_check over all 1 <= d <= d_max, 1 <= i <= d, 1 <= r <= r_max.

    Args:
        d_max (int): Largest dimension.
        r_max (int): Largest dilation.
        workers (int): Worker processes; 1 evaluates in process.

    Returns:
        SweepReport: One result per (d, i, r) triple, in that nesting order.
    """
    if d_max < 1 or r_max < 1:
        raise ValueError(f"Sweep bounds must be at least 1, got d_max={d_max}, r_max={r_max}.")

    triples = [(d, i, r) for d in range(1, d_max + 1) for i in range(1, d + 1) for r in range(1, r_max + 1)]
    logger.info(f"Sweeping {len(triples)} triples with {workers} worker(s)")

    report = SweepReport(d_max=d_max, r_max=r_max)
    if workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            report.results.extend(executor.map(_check_triple, triples))
    else:
        report.results.extend(map(_check_triple, triples))

    for failure in report.failures:
        logger.warning(f"Identity fails for {asdict(failure)}")
    return report
