from itertools import product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from golden import RUNNING_BIWORD_BOTTOM, RUNNING_BIWORD_TOP, RUNNING_EXAMPLE, RUNNING_P, RUNNING_Q
from rskop.contingency import enumerate_tables
from rskop.exceptions import InvalidPairError, InvalidTableauError
from rskop.tableaux import (
    biword,
    bump_chains,
    conjugate,
    content,
    enumerate_ssyt,
    enumerate_ssyt_pairs,
    inverse_rsk,
    is_antidiagonal,
    partitions,
    row_insert,
    rsk,
)


def _weights(d, k):
    return [c for c in product(range(d + 1), repeat=k) if sum(c) == d]


def longest_weak_increasing(seq):
    # O(n^2) dp, deliberately unrelated to insertion
    best = [1] * len(seq)
    for i in range(len(seq)):
        for j in range(i):
            if seq[j] <= seq[i]:
                best[i] = max(best[i], best[j] + 1)
    return max(best, default=0)


def longest_strict_decreasing(seq):
    best = [1] * len(seq)
    for i in range(len(seq)):
        for j in range(i):
            if seq[j] > seq[i]:
                best[i] = max(best[i], best[j] + 1)
    return max(best, default=0)


matrices = st.integers(1, 3).flatmap(
    lambda m: st.integers(1, 3).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, 3), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


def test_running_example():
    pq = rsk(RUNNING_EXAMPLE)
    assert pq.p == RUNNING_P
    assert pq.q == RUNNING_Q
    assert pq.shape == (7, 3, 2)


def test_running_biword():
    word = biword(RUNNING_EXAMPLE)
    assert "".join(str(b.row) for b in word) == RUNNING_BIWORD_TOP
    assert "".join(str(b.col) for b in word) == RUNNING_BIWORD_BOTTOM


def test_running_inverse():
    assert inverse_rsk((RUNNING_P, RUNNING_Q), 3, 3) == RUNNING_EXAMPLE


def test_single_box():
    pq = rsk(((1,),))
    assert pq.p == ((1,),) and pq.q == ((1,),)
    assert rsk(((0,),)).p == ()


def test_row_insert_bumps():
    t, (r, c) = row_insert(((1, 2, 2), (3,)), 2)
    assert t == ((1, 2, 2, 2), (3,))
    assert (r, c) == (1, 4)
    t, (r, c) = row_insert(((1, 3), (4,)), 2)
    assert t == ((1, 2), (3,), (4,))
    assert (r, c) == (3, 1)


@given(matrices)
@settings(max_examples=200, deadline=None)
def test_roundtrip_property(rows):
    a = tuple(map(tuple, rows))
    pq = rsk(a)
    assert inverse_rsk(pq, len(a), len(a[0])) == a


@given(matrices)
@settings(max_examples=200, deadline=None)
def test_shape_matches_greene(rows):
    # first row = longest weakly increasing subsequence of the top word,
    # first column = longest strictly decreasing one
    a = tuple(map(tuple, rows))
    top = [b.row for b in biword(a)]
    pq = rsk(a)
    assert (pq.shape[0] if pq.shape else 0) == longest_weak_increasing(top)
    assert len(pq.shape) == longest_strict_decreasing(top)


@given(matrices)
@settings(max_examples=100, deadline=None)
def test_transpose_swaps_tableaux(rows):
    a = tuple(map(tuple, rows))
    pq = rsk(a)
    assert rsk(tuple(zip(*a))) == (pq.q, pq.p)


@given(matrices)
@settings(max_examples=100, deadline=None)
def test_content_is_margins(rows):
    a = tuple(map(tuple, rows))
    pq = rsk(a)
    assert content(pq.p, len(a)) == tuple(map(sum, a))
    assert content(pq.q, len(a[0])) == tuple(map(sum, zip(*a)))


def test_bump_chains_partition_the_biword():
    a = ((0, 1, 2), (1, 1, 0), (2, 1, 0))
    chains = bump_chains(a)
    assert sorted(b for c in chains for b in c.biletters) == sorted(biword(a))
    assert all(is_antidiagonal(c) for c in chains)
    pq = rsk(a)
    assert len(chains) == len(pq.p[0])
    assert [c.value for c in chains] == list(zip(pq.p[0], pq.q[0]))


def test_ssyt_count_kostka():
    # K_{(2,1),(1,1,1)} = 2, K_{(2,2),(2,1,1)} = 1, K_{(3,1),(1,1,1,1)} = 3
    assert len(enumerate_ssyt((2, 1), (1, 1, 1))) == 2
    assert len(enumerate_ssyt((2, 2), (2, 1, 1))) == 1
    assert len(enumerate_ssyt((3, 1), (1, 1, 1, 1))) == 3


def test_ssyt_pairs_match_rsk_of_tables():
    for s, p in [((2, 1, 1), (1, 2, 1)), ((4, 3), (2, 2, 3)), ((1, 1, 1), (1, 1, 1))]:
        assert enumerate_ssyt_pairs(s, p) == [rsk(a) for a in enumerate_tables(s, p)]


def test_partitions_and_conjugate():
    assert len(partitions(6)) == 11
    assert conjugate((3, 1)) == (2, 1, 1)
    assert all(conjugate(conjugate(lam)) == lam for lam in partitions(7))


def test_invalid_pairs():
    with pytest.raises(InvalidPairError):
        inverse_rsk((((1, 2),), ((1,),)))
    with pytest.raises(InvalidPairError):
        inverse_rsk((((2, 1),), ((1, 1),)))
    with pytest.raises((InvalidTableauError, InvalidPairError)):
        inverse_rsk((((1,), (1,)), ((1,), (2,))))


def test_exhaustive_roundtrip_small():
    count = 0
    for d in range(1, 5):
        for s in _weights(d, 3):
            for p in _weights(d, 3):
                for a in enumerate_tables(s, p):
                    assert inverse_rsk(rsk(a), 3, 3) == a
                    count += 1
    # every 3x3 monomial of degree 1..4 visited once
    assert count == sum(comb(8 + d, d) for d in range(1, 5))
