"""Tests for the scalar k-Mersenne and k-Mersenne-Lucas sequences."""

import pytest

from mersenne_octonions.sequences import (
    Family,
    seq_binet,
    seq_fast,
    seq_value,
    seq_window,
)

M, ML = Family.MERSENNE, Family.MERSENNE_LUCAS


class TestRecurrence:
    def test_mersenne_initials(self):
        for k in (1, 2, 5):
            assert seq_value(M, k, 0) == 0
            assert seq_value(M, k, 1) == 1

    def test_lucas_initials(self):
        for k in (1, 2, 5):
            assert seq_value(ML, k, 0) == 2
            assert seq_value(ML, k, 1) == 3 * k

    def test_k2_values(self):
        # recurrence by hand: x[n+1] = 6x[n] - 2x[n-1]
        assert [seq_value(M, 2, n) for n in range(4)] == [0, 1, 6, 34]
        assert [seq_value(ML, 2, n) for n in range(4)] == [2, 6, 32, 180]

    def test_k1_closed_forms(self):
        for n in range(65):
            assert seq_value(M, 1, n) == 2**n - 1
            assert seq_value(ML, 1, n) == 2**n + 1

    def test_window_matches_pointwise(self):
        assert seq_window(ML, 2, 3, 4) == tuple(
            seq_value(ML, 2, n) for n in range(3, 7)
        )

    def test_bad_params(self):
        with pytest.raises(ValueError):
            seq_value(M, 0, 1)
        with pytest.raises(ValueError):
            seq_value(M, 1, -1)


class TestBinet:
    def test_lucas_start(self):
        for k in (1, 2, 3, 7):
            assert seq_binet(ML, k, 0) == 2
            assert seq_binet(ML, k, 1) == 3 * k

    def test_mersenne_second_is_3k(self):
        for k in (1, 2, 4):
            assert seq_binet(M, k, 2) == 3 * k


class TestFast:
    def test_small_values(self):
        assert [seq_fast(M, 1, n) for n in range(6)] == [0, 1, 3, 7, 15, 31]
        assert seq_fast(M, 2, 0) == 0
        assert seq_fast(ML, 2, 2) == 32

    def test_matches_recurrence_large(self):
        for k in (1, 2, 3):
            assert seq_fast(M, k, 10_000) == seq_value(M, k, 10_000)
            assert seq_fast(ML, k, 10_000) == seq_value(ML, k, 10_000)


class TestEquivalenceAndGrowth:
    @pytest.mark.parametrize("family", [M, ML])
    @pytest.mark.parametrize("k", range(1, 7))
    def test_three_way_equivalence(self, family, k):
        for n in range(65):
            v = seq_value(family, k, n)
            assert seq_binet(family, k, n) == v
            assert seq_fast(family, k, n) == v

    @pytest.mark.parametrize("family", [M, ML])
    def test_strictly_increasing(self, family):
        for k in range(1, 6):
            vals = [seq_value(family, k, n) for n in range(1, 30)]
            assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_scalar_catalan_shadow(self):
        # M[n+r]M[n-r] - M[n]^2 = -2^(n-r) M[r]^2
        for k in range(1, 6):
            for n in range(21):
                for r in range(n + 1):
                    lhs = (
                        seq_value(M, k, n + r) * seq_value(M, k, n - r)
                        - seq_value(M, k, n) ** 2
                    )
                    assert lhs == -(2 ** (n - r)) * seq_value(M, k, r) ** 2
