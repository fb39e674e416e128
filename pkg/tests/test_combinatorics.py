import itertools
import math

import pytest
from hypothesis import given, strategies as st

from schurpress.combinatorics import (
    DimensionOverflow,
    GelfandPattern,
    Partition,
    add_box_set,
    dim_irrep,
    dim_symmetric,
    enumerate_occupations,
    enumerate_patterns,
    interlaces,
    occupation_index,
    occupation_of_index,
    occupation_of_pattern,
    partitions,
    pattern_of_occupation,
    remove_box_set,
)


def brute_force_patterns(top):
    """Every triangular integer array under ``top`` with interlacing rows, by exhaustion."""
    d = len(top)
    hi = max(top, default=0)
    rows_per_level = [list(itertools.product(range(hi + 1), repeat=s)) for s in range(d - 1, 0, -1)]
    found = []
    for lower in itertools.product(*rows_per_level):
        rows = (tuple(top),) + lower
        ok = all(rows[r][i] >= rows[r + 1][i] >= rows[r][i + 1]
                 for r in range(d - 1) for i in range(d - 1 - r))
        if ok:
            found.append(rows)
    return found


def brute_force_occupations(n, d):
    return sorted((c for c in itertools.product(range(n + 1), repeat=d) if sum(c) == n), reverse=True)


class TestPartition:
    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition([1, 2])

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Partition([1, -1])

    def test_weight(self):
        assert Partition([3, 1, 0]).weight == 4


class TestInterlaces:
    def test_examples(self):
        assert interlaces([1, 1], [2, 1, 0])
        assert not interlaces([3], [2, 0])

    @pytest.mark.parametrize("k", range(6))
    def test_boundary_equality(self, k):
        assert interlaces([k], [k, 0])

    def test_zero_padding(self):
        assert interlaces([2], [2, 1, 0])
        assert interlaces([2, 0, 0], [2, 1, 0])

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            interlaces([1, 1, 1], [2, 1, 0])


class TestBoxSets:
    def test_add_box_examples(self):
        assert set(add_box_set([2, 1, 0])) == {(3, 1, 0), (2, 2, 0), (2, 1, 1)}
        assert set(add_box_set([4, 0, 0, 0])) == {(5, 0, 0, 0), (4, 1, 0, 0)}
        assert set(add_box_set([0, 0])) == {(1, 0)}

    def test_remove_box_examples(self):
        assert set(remove_box_set([2, 1])) == {(1, 1), (2, 0)}
        assert set(remove_box_set([5, 0, 0])) == {(4, 0, 0)}
        assert set(remove_box_set([1, 1])) == {(1, 0)}
        assert remove_box_set([0, 0]) == []

    @pytest.mark.parametrize("d", range(1, 5))
    @pytest.mark.parametrize("w", range(0, 7))
    def test_dimension_count(self, d, w):
        for mu in partitions(w, d):
            assert sum(dim_irrep(lam) for lam in add_box_set(mu)) == d * dim_irrep(mu)


class TestPatterns:
    def test_small_examples(self):
        pats = enumerate_patterns([1, 0], 2)
        assert [p.rows[1] for p in pats] == [(1,), (0,)]
        assert len(enumerate_patterns([7], 1)) == 1

    @pytest.mark.parametrize("top, expected", [((2, 0, 0), 6), ((2, 1, 0), 8)])
    def test_counts_against_exhaustion(self, top, expected):
        brute = brute_force_patterns(top)
        assert len(brute) == expected
        assert sorted(p.rows for p in enumerate_patterns(top)) == sorted(brute)
        assert dim_irrep(top) == expected

    @pytest.mark.parametrize("d", range(1, 5))
    @pytest.mark.parametrize("w", range(0, 5))
    def test_all_patterns_interlace_sorted_unique(self, d, w):
        for lam in partitions(w, d):
            pats = enumerate_patterns(lam)
            assert pats == sorted(set(pats), reverse=True)
            for p in pats:
                for r in range(d - 1):
                    upper, lower = p.rows[r], p.rows[r + 1]
                    assert all(upper[i] >= lower[i] >= upper[i + 1] for i in range(len(lower)))
                assert p.n_entries == d * (d + 1) // 2
            assert sorted(p.rows for p in pats) == sorted(brute_force_patterns(tuple(lam)))

    def test_pattern_validation(self):
        with pytest.raises(ValueError):
            GelfandPattern(((2, 0), (3,)))
        with pytest.raises(ValueError):
            GelfandPattern(((2, 0), (1, 0)))


class TestDimensions:
    @pytest.mark.parametrize("n, d, expected", [(2, 2, 3), (3, 3, 10), (1, 5, 5), (10, 2, 11)])
    def test_dim_symmetric(self, n, d, expected):
        assert dim_symmetric(n, d) == expected

    def test_symmetric_irrep_matches_binomial(self):
        for d in range(1, 6):
            for n in range(0, 11):
                assert dim_irrep(Partition.symmetric(n, d)) == math.comb(n + d - 1, d - 1)

    def test_defining_irrep(self):
        for d in range(1, 7):
            assert dim_irrep(Partition.symmetric(1, d)) == d

    def test_overflow(self):
        with pytest.raises(DimensionOverflow):
            dim_symmetric(200, 40)


class TestOccupations:
    def test_d2_n2(self):
        assert [occupation_index(c) for c in [(2, 0), (1, 1), (0, 2)]] == [0, 1, 2]

    def test_first_is_highest(self):
        assert occupation_index((5, 0, 0, 0)) == 0

    def test_rank_against_enumeration(self):
        brute = brute_force_occupations(2, 3)
        assert brute.index((0, 0, 2)) == 5
        assert occupation_index((0, 0, 2)) == 5

    @pytest.mark.parametrize("d", range(1, 5))
    @pytest.mark.parametrize("n", range(0, 7))
    def test_canonical_enumeration(self, n, d):
        occs = enumerate_occupations(n, d)
        assert occs == brute_force_occupations(n, d)
        assert [occupation_index(c) for c in occs] == list(range(len(occs)))
        assert [occupation_of_index(r, n, d) for r in range(len(occs))] == occs

    def test_pattern_of_occupation(self):
        p = pattern_of_occupation((1, 0, 2))
        assert p.rows == ((3, 0, 0), (1, 0), (1,))
        assert occupation_of_pattern(p) == (1, 0, 2)

    def test_symmetric_patterns_biject_with_occupations(self):
        for d in range(1, 5):
            for n in range(0, 6):
                pats = enumerate_patterns(Partition.symmetric(n, d))
                occs = {occupation_of_pattern(p) for p in pats}
                assert occs == set(enumerate_occupations(n, d))
                assert all(pattern_of_occupation(occupation_of_pattern(p)) == p for p in pats)

    def test_invalid(self):
        with pytest.raises(ValueError):
            occupation_index((1, -1))
        with pytest.raises(ValueError):
            occupation_of_pattern(GelfandPattern(((1, 1), (1,))))


@given(st.lists(st.integers(0, 6), min_size=1, max_size=5))
def test_rank_unrank_roundtrip(c):
    c = tuple(c)
    r = occupation_index(c)
    assert 0 <= r < dim_symmetric(sum(c), len(c))
    assert occupation_of_index(r, sum(c), len(c)) == c


@given(st.lists(st.integers(0, 5), min_size=1, max_size=4).map(lambda xs: sorted(xs, reverse=True)))
def test_branching_sum(parts):
    """dim of an irrep equals the sum over interlacing rows of the (d-1) dimensions."""
    from schurpress.combinatorics import partitions_below
    if len(parts) == 1:
        assert dim_irrep(parts) == 1
    else:
        assert dim_irrep(parts) == sum(dim_irrep(r) for r in partitions_below(parts))
