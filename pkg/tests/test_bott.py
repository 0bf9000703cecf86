import random
from fractions import Fraction
from math import comb

import pytest

from river_banks.bott import (
    BottCohomology,
    bott_cohomology,
    chi_polynomial,
    homogeneous_reg,
)
from river_banks.partitions import GenPartition
from river_banks.ratpoly import RatPoly

from corpus import random_partition


def gp(*parts):
    return GenPartition(parts)


class TestBottCohomology:
    def test_sections_of_line_bundle(self):
        assert bott_cohomology(2, gp(0, 0), 3) == BottCohomology(0, 10)

    def test_cotangent_middle_cohomology(self):
        assert bott_cohomology(2, gp(1, 0), -2) == BottCohomology(1, 1)

    def test_repeat_kills_everything(self):
        assert bott_cohomology(2, gp(1, 0), -3) is None

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            bott_cohomology(3, gp(1, 0), 0)

    def test_line_bundle_certification(self):
        for n in range(1, 6):
            o = gp(*([0] * n))
            for d in range(0, 7):
                assert bott_cohomology(n, o, d) == BottCohomology(0, comb(n + d, n))
            assert bott_cohomology(n, o, -n - 1) == BottCohomology(n, 1)
            for d in range(-n, 0):
                assert bott_cohomology(n, o, d) is None

    def test_twist_shift_identity(self):
        rng = random.Random(11)
        for _ in range(50):
            n = rng.randint(1, 4)
            lam = random_partition(rng, n, -3, 4)
            t, d = rng.randint(-3, 3), rng.randint(-8, 8)
            assert bott_cohomology(n, lam.shift(t), d) == bott_cohomology(n, lam, d + t)


def scan_homogeneous_reg(n, lam, k):
    """Independent reg oracle from raw cohomology scans."""
    spread = max(abs(p) for p in lam.parts) + n + 2
    for m in range(spread, -spread - 1, -1):
        for j in range(k + 1, n + 1):
            hit = bott_cohomology(n, lam, m - j)
            if hit is not None and hit.degree == j:
                return m + 1
    return None


class TestHomogeneousReg:
    def test_examples(self):
        assert homogeneous_reg(gp(0, 0), 0) == 0
        assert homogeneous_reg(gp(1, 0), 1) == -1
        lam = gp(7, 5, 2, 2, 0, 0)
        assert [homogeneous_reg(lam, k) for k in range(6)] == [0, 0, -2, -2, -5, -7]

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            homogeneous_reg(gp(1, 0), 2)
        with pytest.raises(ValueError):
            homogeneous_reg(gp(1, 0), -1)

    def test_matches_scan_oracle(self):
        rng = random.Random(12)
        for _ in range(80):
            n = rng.randint(1, 5)
            lam = random_partition(rng, n, -4, 6)
            k = rng.randint(0, n - 1)
            assert scan_homogeneous_reg(n, lam, k) == homogeneous_reg(lam, k)


class TestSingleRow:
    def test_at_most_one_degree_nonzero(self):
        rng = random.Random(13)
        for _ in range(60):
            n = rng.randint(1, 5)
            lam = random_partition(rng, n, -4, 6)
            for d in range(-12, 12):
                hit = bott_cohomology(n, lam, d)
                if hit is not None:
                    assert 0 <= hit.degree <= n and hit.dim >= 1


class TestChiPolynomial:
    def test_structure_sheaf_p2(self):
        chi = chi_polynomial(2, gp(0, 0))
        assert chi == RatPoly([1, Fraction(3, 2), Fraction(1, 2)])

    def test_matches_alternating_sum(self):
        rng = random.Random(14)
        for _ in range(40):
            n = rng.randint(1, 4)
            lam = random_partition(rng, n, -3, 5)
            chi = chi_polynomial(n, lam)
            assert chi.degree == n
            for d in range(-10, 11):
                hit = bott_cohomology(n, lam, d)
                expected = 0 if hit is None else (-1) ** hit.degree * hit.dim
                assert chi(d) == expected

    def test_cotangent_value(self):
        assert chi_polynomial(2, gp(1, 0))(-2) == -1

    def test_root_structure(self):
        assert chi_polynomial(3, gp(0, 0, 0)).integer_roots() == [-3, -2, -1]
        rng = random.Random(15)
        for _ in range(40):
            n = rng.randint(1, 4)
            lam = random_partition(rng, n, -3, 5)
            expected = sorted({-(lam.part(k - 1) + k) for k in range(1, n + 1)})
            assert chi_polynomial(n, lam).integer_roots() == expected
