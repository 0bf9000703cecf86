"""Greedy chain decomposition of zero-regular tables.

Any bundle table with nonpositive regularity index at k = 0 is a unique
positive rational combination of homogeneous-bundle tables along a chain of
labels.  The greedy step implemented here pivots at the componentwise-minimal
label compatible with the residual's regularity profile, extracts the largest
coefficient keeping the residual entrywise nonnegative on a certified window,
and repeats.  Honest chain sums are recovered exactly; inputs outside that
scope fail loudly instead of being approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from river_banks.bott import bott_cohomology, chi_polynomial
from river_banks.partitions import GenPartition, leq
from river_banks.ratpoly import RatPoly
from river_banks.tables import (
    BottSumTable,
    CohomologyTable,
    InsufficientDataError,
    NEG_INFINITY,
    POS_INFINITY,
)

MAX_TERMS = 64


class NotZeroRegularError(ValueError):
    """The input table is not zero-regular, so no decomposition is attempted."""


class NotDecomposableWithinScope(Exception):
    """The greedy run failed; carries the partial decomposition extracted so far."""

    def __init__(self, reason, partial):
        self.reason = reason
        self.partial = partial
        super().__init__(reason)


@dataclass(frozen=True)
class Decomposition:
    """Ordered terms (coefficient, label), smallest label first."""

    terms: tuple
    residual_zero: bool
    chain_certified: bool

    def to_json(self):
        return [{"coeff": _frac_str(c), "lambda": str(lam)} for c, lam in self.terms]


def _frac_str(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def decompose(t: CohomologyTable) -> Decomposition:
    """Run the greedy chain decomposition of a zero-regular table.

    The verification window spans display columns from -(P + n + 2) to
    P + n + 2 where P bounds the largest label part that can occur (read off
    the coregularity index at k = 0); every extracted coefficient is exact
    and the residual is checked entrywise on that window.  When the input has
    a twist polynomial the recomposed polynomial must match it exactly, which
    certifies the tails beyond the window.
    """
    n = t.n
    reg0 = t.reg(0)
    coreg0 = t.coreg(0)
    if reg0 == NEG_INFINITY and coreg0 == POS_INFINITY:
        return Decomposition((), True, True)
    if reg0 > 0:
        raise NotZeroRegularError(f"regularity index at k=0 is {reg0} > 0")

    maxpart = max(-coreg0 - 1, 0)
    lo, hi = -maxpart - n - 2, maxpart + n + 2
    grid = [[Fraction(t.entry(i, c - i)) for c in range(lo, hi + 1)]
            for i in range(n + 1)]

    terms = []
    prev = None
    for _ in range(MAX_TERMS):
        if not any(any(row) for row in grid):
            break
        lam = _pivot_label(grid, lo, n, terms)
        if prev is not None and not leq(prev, lam):
            raise NotDecomposableWithinScope(
                f"chain order violated: {prev} vs {lam}", _partial(terms))
        pivot = [[_bott_entry(n, lam, i, c - i) for c in range(lo, hi + 1)]
                 for i in range(n + 1)]
        ratios = [grid[i][x] / pv
                  for i, prow in enumerate(pivot)
                  for x, pv in enumerate(prow) if pv]
        coeff = min(ratios)
        if coeff <= 0:
            raise NotDecomposableWithinScope(
                f"greedy coefficient for {lam} is zero", _partial(terms))
        for i in range(n + 1):
            for x, pv in enumerate(pivot[i]):
                if pv:
                    grid[i][x] -= coeff * pv
        terms.append((coeff, lam))
        prev = lam
    else:
        raise NotDecomposableWithinScope(
            f"residual nonzero after {MAX_TERMS} terms", _partial(terms))

    try:
        chi = t.hilbert_polynomial()
    except InsufficientDataError:
        chi = None
    if chi is not None:
        recomposed = RatPoly()
        for coeff, lam in terms:
            recomposed = recomposed + chi_polynomial(n, lam) * coeff
        if recomposed != chi:
            raise NotDecomposableWithinScope(
                "twist polynomial of the recomposition differs from the input",
                _partial(terms))
    return Decomposition(tuple(terms), True, True)


def recompose(dec: Decomposition, n: int) -> BottSumTable:
    """Sum of homogeneous tables with the decomposition's rational coefficients."""
    return BottSumTable(n, [(c, lam) for c, lam in dec.terms])


def _partial(terms):
    return Decomposition(tuple(terms), False, bool(terms))


def _bott_entry(n, lam, i, d):
    hit = bott_cohomology(n, lam, d)
    return hit.dim if hit is not None and hit.degree == i else 0


def _pivot_label(grid, lo, n, terms):
    """Label whose parts negate the residual grid's regularity profile."""
    parts_small_first = []
    for k in range(n):
        dirty = [x for x in range(len(grid[0]))
                 if any(grid[j][x] for j in range(k + 1, n + 1))]
        if not dirty:
            raise NotDecomposableWithinScope(
                f"residual has no support below row {k}", _partial(terms))
        reg_k = lo + max(dirty) + 1
        parts_small_first.append(-reg_k)
    if parts_small_first[0] < 0:
        raise NotDecomposableWithinScope(
            "residual is no longer zero-regular", _partial(terms))
    return GenPartition(reversed(parts_small_first))
