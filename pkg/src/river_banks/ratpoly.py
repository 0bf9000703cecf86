"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm


class RatPoly:
    """Immutable polynomial; ``coeffs[k]`` multiplies x**k, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, RatPoly):
            other = RatPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RatPoly([c + (b[k] if k < len(b) else 0) for k, c in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, RatPoly):
            other = RatPoly([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RatPoly):
            return RatPoly(c * other for c in self.coeffs)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __repr__(self):
        if not self.coeffs:
            return "RatPoly(0)"
        terms = [f"{c}*x^{k}" if k else str(c) for k, c in enumerate(self.coeffs) if c]
        return "RatPoly(" + " + ".join(terms) + ")"

    def compose_linear(self, a, b) -> "RatPoly":
        """The polynomial x |-> p(a*x + b)."""
        inner = RatPoly([b, a])
        acc = RatPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + RatPoly([c])
        return acc

    def integer_roots(self) -> list[int]:
        """Sorted distinct integer roots, found exactly.

        Clears denominators, factors out the power of x, and tests the
        divisors of the resulting constant term.
        """
        if not self.coeffs:
            raise ValueError("the zero polynomial has no well-defined root set")
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        roots = set()
        low = 0
        while ints[low] == 0:
            roots.add(0)
            low += 1
        const = abs(ints[low])
        for d in _divisors(const):
            for r in (d, -d):
                if self(r) == 0:
                    roots.add(r)
        return sorted(roots)


def _divisors(m):
    out = []
    for d in range(1, isqrt(m) + 1):
        if m % d == 0:
            out.append(d)
            if d != m // d:
                out.append(m // d)
    return out
