"""Exact kernels of paired wedge-multiplication maps in five variables.

A pair of 2-forms over a 5-dimensional space defines the stacked linear map
from the 10-dimensional space of 2-forms to two copies of the 5-dimensional
space of 4-forms given by wedging with each form; its kernel is always
nonzero, and this module computes the kernel dimension exactly.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm

DIM = 5
BASIS2 = tuple(combinations(range(1, DIM + 1), 2))
BASIS4 = tuple(combinations(range(1, DIM + 1), 4))
_INDEX4 = {quad: r for r, quad in enumerate(BASIS4)}


class TwoForm:
    """Degree-two element, stored as coefficients over the ordered monomial basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != len(BASIS2):
            raise ValueError(f"expected {len(BASIS2)} coefficients, got {len(coeffs)}")
        self.coeffs = coeffs

    @classmethod
    def zero(cls):
        return cls((0,) * len(BASIS2))

    @classmethod
    def monomial(cls, i, j, coeff=1):
        if not (1 <= i < j <= DIM):
            raise ValueError(f"monomial indices must satisfy 1 <= i < j <= {DIM}")
        vals = [Fraction(0)] * len(BASIS2)
        vals[BASIS2.index((i, j))] = Fraction(coeff)
        return cls(vals)

    @classmethod
    def from_pairs(cls, pairs):
        """Build from ((i, j), coefficient) pairs; coefficients may be 'p/q' strings."""
        vals = [Fraction(0)] * len(BASIS2)
        for (i, j), c in pairs:
            if not (1 <= i < j <= DIM):
                raise ValueError(f"bad monomial index ({i}, {j})")
            vals[BASIS2.index((i, j))] += Fraction(c)
        return cls(vals)

    def to_pairs(self):
        return [(pair, str(c)) for pair, c in zip(BASIS2, self.coeffs) if c]

    @classmethod
    def random(cls, rng):
        """Integer coefficients in [-9, 9] from the given seeded generator."""
        return cls(rng.randint(-9, 9) for _ in BASIS2)

    def __add__(self, other):
        return TwoForm(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __rmul__(self, scalar):
        return TwoForm(Fraction(scalar) * c for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, TwoForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        body = " + ".join(f"{c}*e{i}{j}" for (i, j), c in
                          zip(BASIS2, self.coeffs) if c) or "0"
        return f"TwoForm({body})"


def _wedge4(a, b, c, d):
    """(sorted 4-tuple, sign) of e_a e_b e_c e_d, or (None, 0) on a repeat."""
    quad = (a, b, c, d)
    if len(set(quad)) < 4:
        return None, 0
    inv = sum(1 for s in range(4) for t in range(s + 1, 4) if quad[s] > quad[t])
    return tuple(sorted(quad)), (-1) ** inv


def wedge_matrix(eta1: TwoForm, eta2: TwoForm):
    """Matrix of w |-> (w ^ eta1, w ^ eta2); 10 rows (two 4-form blocks), 10 columns."""
    rows = [[Fraction(0)] * len(BASIS2) for _ in range(2 * len(BASIS4))]
    for col, (a, b) in enumerate(BASIS2):
        for block, eta in enumerate((eta1, eta2)):
            for (c, d), coeff in zip(BASIS2, eta.coeffs):
                if not coeff:
                    continue
                quad, sign = _wedge4(a, b, c, d)
                if sign:
                    rows[block * len(BASIS4) + _INDEX4[quad]][col] += sign * coeff
    return rows


def kernel_dim(eta1: TwoForm, eta2: TwoForm) -> int:
    """Dimension of the common annihilator; at least 1 for every pair."""
    return len(BASIS2) - rank(wedge_matrix(eta1, eta2))


def rank(matrix) -> int:
    """Exact rank over the rationals via integer fraction-free elimination."""
    rows = []
    for row in matrix:
        den = lcm(*(Fraction(c).denominator for c in row)) if row else 1
        rows.append([int(Fraction(c) * den) for c in row])
    return _rank_int(rows)


def _rank_int(rows):
    m = [r[:] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank_ = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank_, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank_], m[piv] = m[piv], m[rank_]
        pv = m[rank_][col]
        for r in range(rank_ + 1, nrows):
            vr = m[r][col]
            for c in range(col, ncols):
                num = pv * m[r][c] - vr * m[rank_][c]
                q, rem = divmod(num, prev)
                assert rem == 0, "fraction-free step produced a remainder"
                m[r][c] = q
        prev = pv
        rank_ += 1
        if rank_ == nrows:
            break
    return rank_


def rank_mod_p(matrix, p: int) -> int:
    """Rank of the reduction mod p; raises ValueError if a denominator dies mod p."""
    m = []
    for row in matrix:
        red = []
        for c in row:
            c = Fraction(c)
            if c.denominator % p == 0:
                raise ValueError(f"denominator of {c} vanishes mod {p}")
            red.append(c.numerator * pow(c.denominator, -1, p) % p)
        m.append(red)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank_ = 0
    for col in range(ncols):
        piv = next((r for r in range(rank_, nrows) if m[r][col] % p), None)
        if piv is None:
            continue
        m[rank_], m[piv] = m[piv], m[rank_]
        inv = pow(m[rank_][col], -1, p)
        for r in range(rank_ + 1, nrows):
            factor = m[r][col] * inv % p
            if factor:
                m[r] = [(vr - factor * vp) % p for vr, vp in zip(m[r], m[rank_])]
        rank_ += 1
        if rank_ == nrows:
            break
    return rank_
