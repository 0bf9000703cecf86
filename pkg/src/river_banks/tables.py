"""Queryable cohomology tables and their index profiles.

A table knows its ambient projective dimension n and answers ``entry(i, d)``
-- the dimension of the i-th cohomology group of the d-th twist -- exactly.
Generator backends (sums of homogeneous-bundle tables and the dual / twist /
direct-sum wrappers) are defined for every twist; literal backends hold a
finite window of values and refuse to answer outside it, since inventing
zeros beyond a printed excerpt would fabricate vanishing.

Display convention shared by the ASCII and JSON formats: ``entry(i, d)``
is shown in row i (rows listed top to bottom from n down to 0) and display
column i + d; zeros print as dots and the final line lists the display
column numbers.  Consequently the cells of display column m are exactly the
antidiagonal ``{(j, m - j)}`` that the regularity indices quantify over:

* ``reg(k)``  = least m such that rows j > k hold only zeros in display
  columns >= m;
* ``coreg(k)`` = greatest m such that rows j < n - k hold only zeros in
  display columns <= m.

For literal tables these are computed by scanning the window; an answer that
touches the window boundary is reported with a ``window_limited`` flag
instead of being silently extrapolated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from river_banks.bott import bott_cohomology, chi_polynomial
from river_banks.partitions import GenPartition
from river_banks.ratpoly import RatPoly

#: Explicit index values for vacuous regularity conditions (never sentinels).
NEG_INFINITY = float("-inf")
POS_INFINITY = float("inf")

INT64_MAX = 2**63 - 1


class WindowExceededError(LookupError):
    """A literal table was asked for a cell outside its window."""

    def __init__(self, i, d, lo, hi):
        self.i, self.d, self.lo, self.hi = i, d, lo, hi
        super().__init__(
            f"cell (i={i}, d={d}) sits in display column {i + d}, "
            f"outside the window {lo}..{hi}"
        )


class UndecidableError(Exception):
    """The requested classification cannot be settled from the data given."""


class InsufficientDataError(ValueError):
    """A literal window does not determine the requested global quantity."""


def _exact(v):
    """Collapse integral fractions to int so entries compare cleanly."""
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


class CohomologyTable:
    """Base class; tables are immutable values and safe to share."""

    n: int

    def entry(self, i: int, d: int):
        if i < 0 or i > self.n:
            return 0
        return self._entry(i, d)

    def _entry(self, i, d):
        raise NotImplementedError

    # --- regularity / coregularity ------------------------------------

    def reg(self, k: int):
        """k-th regularity index; NEG_INFINITY when the condition is vacuous."""
        if k < 0:
            raise ValueError(f"index {k} out of range")
        if k >= self.n:
            return NEG_INFINITY
        return self._reg_limited(k)[0]

    def coreg(self, k: int):
        """k-th coregularity index; POS_INFINITY when the condition is vacuous."""
        if k < 0:
            raise ValueError(f"index {k} out of range")
        if k >= self.n:
            return POS_INFINITY
        return self._coreg_limited(k)[0]

    def _reg_limited(self, k):
        raise NotImplementedError

    def _coreg_limited(self, k):
        raise NotImplementedError

    # --- structural operations ----------------------------------------

    def dual(self) -> "CohomologyTable":
        return DualTable(self)

    def twist(self, s: int) -> "CohomologyTable":
        return TwistTable(self, s)

    def __add__(self, other):
        if not isinstance(other, CohomologyTable):
            return NotImplemented
        return add(self, other)

    def hilbert_polynomial(self) -> RatPoly:
        raise NotImplementedError

    def _scan_range(self):
        """Display columns (lo, hi) certified to contain every index answer."""
        raise NotImplementedError


class BottSumTable(CohomologyTable):
    """Direct sum of homogeneous-bundle tables with positive multiplicities.

    Multiplicities may be integers or exact rationals (rational ones arise
    from decompositions); zero terms are dropped and equal labels merged.
    """

    def __init__(self, n, terms):
        merged = {}
        for mult, lam in terms:
            if not isinstance(lam, GenPartition):
                lam = GenPartition(lam)
            if lam.n != n:
                raise ValueError(f"label {lam} has length {lam.n}, expected {n}")
            mult = _exact(Fraction(mult))
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {lam}")
            if mult:
                merged[lam] = _exact(merged.get(lam, 0) + mult)
        self.n = n
        self.terms = tuple(sorted(((m, lam) for lam, m in merged.items()),
                                  key=lambda t: t[1].parts))

    def _entry(self, i, d):
        total = 0
        for mult, lam in self.terms:
            hit = bott_cohomology(self.n, lam, d)
            if hit is not None and hit.degree == i:
                total += mult * hit.dim
        return _exact(total)

    def _reg_limited(self, k):
        if not self.terms:
            return (NEG_INFINITY, False)
        return (max(-lam.part(k) for _, lam in self.terms), False)

    def _coreg_limited(self, k):
        if not self.terms:
            return (POS_INFINITY, False)
        return (min(-lam.part(self.n - 1 - k) - 1 for _, lam in self.terms), False)

    def twist(self, s):
        return BottSumTable(self.n, [(m, lam.shift(s)) for m, lam in self.terms])

    def hilbert_polynomial(self):
        acc = RatPoly()
        for mult, lam in self.terms:
            acc = acc + chi_polynomial(self.n, lam) * mult
        return acc

    def _scan_range(self):
        if not self.terms:
            return (-self.n - 2, self.n + 2)
        parts = [p for _, lam in self.terms for p in lam.parts]
        return (-max(parts) - self.n - 2, -min(parts) + self.n + 2)

    def __repr__(self):
        inner = " + ".join(f"{m}*S[{lam}]" for m, lam in self.terms) or "0"
        return f"<BottSumTable n={self.n} {inner}>"


def homogeneous_table(lam: GenPartition, mult=1) -> BottSumTable:
    """Table of the single homogeneous bundle labelled by ``lam``."""
    return BottSumTable(lam.n, [(mult, lam)])


def structure_sheaf_table(n: int, t: int = 0) -> BottSumTable:
    """Table of the t-th power of the hyperplane bundle on P^n."""
    return homogeneous_table(GenPartition((t,) * n))


class DualTable(CohomologyTable):
    """Serre-dual table: entry(i, d) of the dual is entry(n - i, -d - n - 1)."""

    def __init__(self, inner):
        self.n = inner.n
        self.inner = inner

    def _entry(self, i, d):
        return self.inner.entry(self.n - i, -d - self.n - 1)

    def _reg_limited(self, k):
        v, flag = self.inner._coreg_limited(k)
        return (-v - 1, flag)

    def _coreg_limited(self, k):
        v, flag = self.inner._reg_limited(k)
        return (-v - 1, flag)

    def hilbert_polynomial(self):
        chi = self.inner.hilbert_polynomial().compose_linear(-1, -self.n - 1)
        return chi * Fraction((-1) ** self.n)

    def _scan_range(self):
        lo, hi = self.inner._scan_range()
        return (-hi - self.n - 1, -lo - self.n - 1)


class TwistTable(CohomologyTable):
    """Table of a twist: entry(i, d) = entry(inner, i, d + s)."""

    def __init__(self, inner, s):
        self.n = inner.n
        self.inner = inner
        self.s = int(s)

    def _entry(self, i, d):
        return self.inner.entry(i, d + self.s)

    def _reg_limited(self, k):
        v, flag = self.inner._reg_limited(k)
        return (v - self.s, flag)

    def _coreg_limited(self, k):
        v, flag = self.inner._coreg_limited(k)
        return (v - self.s, flag)

    def hilbert_polynomial(self):
        return self.inner.hilbert_polynomial().compose_linear(1, self.s)

    def _scan_range(self):
        lo, hi = self.inner._scan_range()
        return (lo - self.s, hi - self.s)


class SumTable(CohomologyTable):
    """Entrywise direct sum of tables on the same ambient space."""

    def __init__(self, tables):
        tables = tuple(tables)
        if not tables:
            raise ValueError("empty sum; use an empty BottSumTable for the zero table")
        n = tables[0].n
        if any(t.n != n for t in tables):
            raise ValueError("summands live on different projective spaces")
        self.n = n
        self.tables = tables

    def _entry(self, i, d):
        return _exact(sum(t.entry(i, d) for t in self.tables))

    def _reg_limited(self, k):
        pairs = [t._reg_limited(k) for t in self.tables]
        return (max(v for v, _ in pairs), any(f for _, f in pairs))

    def _coreg_limited(self, k):
        pairs = [t._coreg_limited(k) for t in self.tables]
        return (min(v for v, _ in pairs), any(f for _, f in pairs))

    def hilbert_polynomial(self):
        acc = RatPoly()
        for t in self.tables:
            acc = acc + t.hilbert_polynomial()
        return acc

    def _scan_range(self):
        ranges = [t._scan_range() for t in self.tables]
        return (min(lo for lo, _ in ranges), max(hi for _, hi in ranges))


class LiteralTable(CohomologyTable):
    """Finite window of values; queries outside the window are hard errors.

    ``rows_by_i[i]`` holds row i left to right over display columns
    ``lo..hi``; entries are nonnegative integers.
    """

    def __init__(self, n, lo, hi, rows_by_i):
        if hi < lo:
            raise ValueError(f"empty window {lo}..{hi}")
        rows = tuple(tuple(int(v) for v in row) for row in rows_by_i)
        width = hi - lo + 1
        if len(rows) != n + 1:
            raise ValueError(f"expected {n + 1} rows, got {len(rows)}")
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ValueError(f"row {i} has {len(row)} cells, expected {width}")
            if any(v < 0 for v in row):
                raise ValueError(f"negative entry in row {i}")
        self.n = n
        self.lo = lo
        self.hi = hi
        self.rows_by_i = rows

    @property
    def window(self):
        return (self.lo, self.hi)

    def _entry(self, i, d):
        c = i + d
        if not self.lo <= c <= self.hi:
            raise WindowExceededError(i, d, self.lo, self.hi)
        return self.rows_by_i[i][c - self.lo]

    def _column_dirty(self, c, row_range):
        off = c - self.lo
        return any(self.rows_by_i[j][off] for j in row_range)

    def _reg_limited(self, k):
        dirty = [c for c in range(self.lo, self.hi + 1)
                 if self._column_dirty(c, range(k + 1, self.n + 1))]
        if not dirty:
            return (self.lo, True)
        m = max(dirty) + 1
        return (m, m > self.hi)

    def _coreg_limited(self, k):
        dirty = [c for c in range(self.lo, self.hi + 1)
                 if self._column_dirty(c, range(0, self.n - k))]
        if not dirty:
            return (self.hi, True)
        m = min(dirty) - 1
        return (m, m < self.lo)

    def hilbert_polynomial(self):
        raise InsufficientDataError(
            "a finite window does not determine the twist polynomial"
        )

    def _scan_range(self):
        return (self.lo, self.hi)


# --- module-level operation surface ------------------------------------


def entry(t: CohomologyTable, i: int, d: int):
    return t.entry(i, d)


def reg(t: CohomologyTable, k: int):
    return t.reg(k)


def coreg(t: CohomologyTable, k: int):
    return t.coreg(k)


def dual(t: CohomologyTable) -> CohomologyTable:
    return t.dual()


def twist(t: CohomologyTable, s: int) -> CohomologyTable:
    return t.twist(s)


def add(t1: CohomologyTable, t2: CohomologyTable) -> CohomologyTable:
    if t1.n != t2.n:
        raise ValueError(f"ambient dimension mismatch: {t1.n} vs {t2.n}")
    return SumTable((t1, t2))


@dataclass(frozen=True)
class RegularityProfile:
    """Index vectors for k = 0..n-1, with per-entry window flags."""

    reg: tuple
    coreg: tuple
    reg_window_limited: tuple
    coreg_window_limited: tuple

    def to_json(self):
        return {
            "reg": [_json_index(v) for v in self.reg],
            "coreg": [_json_index(v) for v in self.coreg],
            "reg_window_limited": list(self.reg_window_limited),
            "coreg_window_limited": list(self.coreg_window_limited),
        }


def _json_index(v):
    if v == NEG_INFINITY:
        return "-inf"
    if v == POS_INFINITY:
        return "inf"
    return int(v)


def regularity_profile(t: CohomologyTable) -> RegularityProfile:
    regs, rflags, coregs, cflags = [], [], [], []
    for k in range(t.n):
        v, f = t._reg_limited(k)
        regs.append(v)
        rflags.append(f)
        v, f = t._coreg_limited(k)
        coregs.append(v)
        cflags.append(f)
    return RegularityProfile(tuple(regs), tuple(coregs), tuple(rflags), tuple(cflags))


# --- classification ------------------------------------------------------


def is_natural(t: CohomologyTable, window=None) -> bool:
    """True when no twist in range has two nonzero cohomology groups.

    For generator backends the scan covers a certified range outside of
    which only the extreme rows can be nonzero; for literal tables only the
    visible cells can be, and are, consulted.
    """
    if window is None:
        window = t._scan_range()
    lo, hi = window
    for d in range(lo - t.n, hi + 1):
        seen = 0
        for i in range(t.n + 1):
            try:
                v = t.entry(i, d)
            except WindowExceededError:
                continue
            if v:
                seen += 1
                if seen > 1:
                    return False
    return True


def is_supernatural(t: CohomologyTable, chi: RatPoly | None = None) -> bool:
    """Natural cohomology plus a twist polynomial with n distinct integer roots.

    Literal tables need ``chi`` supplied; without it the question is not
    decidable from a finite window and ``UndecidableError`` is raised.
    """
    if isinstance(t, LiteralTable):
        if chi is None:
            raise UndecidableError(
                "supernaturality of a windowed table needs the twist polynomial"
            )
    else:
        chi = t.hilbert_polynomial()
    if not is_natural(t):
        return False
    return chi.degree == t.n and len(chi.integer_roots()) == t.n


def hilbert_polynomial(t: CohomologyTable) -> RatPoly:
    return t.hilbert_polynomial()


def beilinson_terms(t: CohomologyTable, e: int):
    """Multiplicities along display column e, as (row j, entry(j, e - j)) pairs.

    Rows run over max(0, e) <= j <= min(n, n + e); zero entries are omitted.
    """
    out = []
    for j in range(max(0, e), min(t.n, t.n + e) + 1):
        v = t.entry(j, e - j)
        if v:
            out.append((j, v))
    return out


# --- ASCII format ---------------------------------------------------------


def render_ascii(t: CohomologyTable, lo: int, hi: int) -> str:
    """Rows n..0 with ``i:`` prefixes, dots for zeros, then the column index line."""
    if hi < lo:
        raise ValueError(f"empty window {lo}..{hi}")
    n = t.n
    cols = list(range(lo, hi + 1))
    cells = {}
    for i in range(n + 1):
        for c in cols:
            v = t.entry(i, c - i)
            cells[i, c] = str(v) if v else "."
    widths = {c: max(len(str(c)), max(len(cells[i, c]) for i in range(n + 1)))
              for c in cols}
    label_w = len(f"{n}:")
    lines = []
    for i in range(n, -1, -1):
        body = " ".join(cells[i, c].rjust(widths[c]) for c in cols)
        lines.append(f"{i}:".rjust(label_w) + " " + body)
    index = " ".join(str(c).rjust(widths[c]) for c in cols)
    lines.append(" " * label_w + " " + index)
    return "\n".join(lines) + "\n"


def parse_ascii(text: str) -> LiteralTable:
    """Inverse of render_ascii up to whitespace width.

    The last token of the index line may carry a single trailing period
    (tables copied from print sometimes end in one).
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise ValueError("table text needs at least one row and an index line")
    *row_lines, index_line = lines
    idx_tokens = index_line.split()
    if idx_tokens and idx_tokens[-1].endswith("."):
        idx_tokens[-1] = idx_tokens[-1][:-1]
    try:
        cols = [int(tok) for tok in idx_tokens]
    except ValueError:
        raise ValueError(f"malformed index line: {index_line!r}") from None
    if not cols:
        raise ValueError("missing index line")
    if any(b != a + 1 for a, b in zip(cols, cols[1:])):
        raise ValueError(f"index line is not consecutive: {cols}")
    lo, hi = cols[0], cols[-1]

    n = len(row_lines) - 1
    rows_by_i = [None] * (n + 1)
    for expected, line in zip(range(n, -1, -1), row_lines):
        tokens = line.split()
        if not tokens or not tokens[0].endswith(":"):
            raise ValueError(f"row line lacks a label: {line!r}")
        try:
            label = int(tokens[0][:-1])
        except ValueError:
            raise ValueError(f"bad row label in {line!r}") from None
        if label != expected:
            raise ValueError(f"row label {label} out of order; expected {expected}")
        body = tokens[1:]
        if len(body) != len(cols):
            raise ValueError(
                f"row {label} has {len(body)} cells, expected {len(cols)}"
            )
        vals = []
        for tok in body:
            if tok == ".":
                vals.append(0)
                continue
            try:
                v = int(tok)
            except ValueError:
                raise ValueError(f"bad cell {tok!r} in row {label}") from None
            if v < 0:
                raise ValueError(f"negative entry {v} in row {label}")
            vals.append(v)
        rows_by_i[label] = vals
    return LiteralTable(n, lo, hi, rows_by_i)


def ascii_normalize(text: str) -> str:
    """Collapse whitespace runs so differently aligned renders compare equal.

    A single trailing period after the final index number is dropped, the
    same tolerance parse_ascii extends to tables copied from print.
    """
    lines = [" ".join(ln.split()) for ln in text.splitlines()]
    out = "\n".join(ln for ln in lines if ln)
    if out.endswith(".") and not out.endswith(" ."):
        out = out[:-1]
    return out


# --- JSON format ----------------------------------------------------------


def table_to_json(t: CohomologyTable, lo: int, hi: int) -> dict:
    """{"n", "window", "rows"} with rows listed from i = n down to 0.

    Entries that do not fit a signed 64-bit integer are emitted as decimal
    strings.
    """
    rows = []
    for i in range(t.n, -1, -1):
        row = []
        for c in range(lo, hi + 1):
            v = t.entry(i, c - i)
            if isinstance(v, Fraction):
                raise ValueError(f"non-integral entry {v} at (i={i}, col={c})")
            row.append(v if abs(v) <= INT64_MAX else str(v))
        rows.append(row)
    return {"n": t.n, "window": [lo, hi], "rows": rows}


def literal_from_json(obj: dict) -> LiteralTable:
    n = int(obj["n"])
    lo, hi = (int(v) for v in obj["window"])
    rows = obj["rows"]
    if len(rows) != n + 1:
        raise ValueError(f"expected {n + 1} rows, got {len(rows)}")
    rows_by_i = [[int(v) for v in row] for row in reversed(rows)]
    return LiteralTable(n, lo, hi, rows_by_i)
