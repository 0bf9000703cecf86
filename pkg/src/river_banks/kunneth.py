"""Tables of direct images of split line bundles from a product of lines.

The finite projection from the m-fold product of the projective line onto
m-dimensional projective space pushes the line bundle of multidegree
(a_1, ..., a_m) forward to a rank-m! bundle whose twist by d has the
cohomology of the multidegree (a_1 + d, ..., a_m + d) upstairs; that
cohomology factors over the line factors, so every entry is a short product
formula.
"""

from __future__ import annotations

from itertools import combinations

from river_banks.ratpoly import RatPoly
from river_banks.tables import CohomologyTable


def _h0_line(a):
    return a + 1 if a >= 0 else 0


def _h1_line(a):
    return -a - 1 if a <= -2 else 0


def product_line_cohomology(a, i: int) -> int:
    """i-th cohomology dimension of the multidegree-``a`` line bundle upstairs.

    Sums over the i-subsets of factors contributing their first cohomology
    while the rest contribute sections.
    """
    a = tuple(int(x) for x in a)
    m = len(a)
    if i < 0 or i > m:
        return 0
    total = 0
    for picked in combinations(range(m), i):
        picked = set(picked)
        prod = 1
        for j, aj in enumerate(a):
            prod *= _h1_line(aj) if j in picked else _h0_line(aj)
            if prod == 0:
                break
        total += prod
    return total


class KunnethTable(CohomologyTable):
    """Pushforward table for a multidegree ``a`` on P^len(a)."""

    def __init__(self, a):
        a = tuple(int(x) for x in a)
        if not a:
            raise ValueError("multidegree needs at least one factor")
        self.a = a
        self.n = len(a)

    def _entry(self, i, d):
        return product_line_cohomology(tuple(aj + d for aj in self.a), i)

    def twist(self, s):
        return KunnethTable(tuple(aj + s for aj in self.a))

    def hilbert_polynomial(self):
        poly = RatPoly([1])
        for aj in self.a:
            poly = poly * RatPoly([aj + 1, 1])
        return poly

    def _scan_range(self):
        return (-max(self.a) - self.n - 2, -min(self.a) + self.n + 2)

    def _reg_limited(self, k):
        # Row j > 0 needs some factor of degree <= -2, so high columns are
        # clean and the scan over the certified range terminates.
        lo, hi = self._scan_range()
        for m in range(hi, lo - 1, -1):
            if any(self.entry(j, m - j) for j in range(k + 1, self.n + 1)):
                return (m + 1, False)
        return (lo, False)

    def _coreg_limited(self, k):
        lo, hi = self._scan_range()
        for m in range(lo, hi + 1):
            if any(self.entry(j, m - j) for j in range(0, self.n - k)):
                return (m - 1, False)
        return (hi, False)

    def __repr__(self):
        return f"<KunnethTable {','.join(str(x) for x in self.a)}>"


def pushforward_table(a) -> KunnethTable:
    """Cohomology table of the pushforward of the multidegree-``a`` line bundle."""
    return KunnethTable(a)
