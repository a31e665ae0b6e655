from collections import Counter
from itertools import product
from math import comb

import pytest

from rskop.contingency import count_tables
from rskop.exceptions import InvalidInputError
from rskop.weights import (
    block_multiplicities,
    block_multiplicity,
    count_A,
    downward_closure,
    enumerate_reduced_pairs,
    growth_matrix,
    growth_potential,
    is_reduced,
    n_zero,
    normalize,
    poset_covers,
    reduce,
    reduced_form,
)


def _vectors(d, k):
    return [c for c in product(range(d + 1), repeat=k) if sum(c) == d]


def brute_blocks(m, n, d):
    """Reduce every weight pair of R_{m,n,d} and tally the labels."""
    tally = Counter()
    for s in _vectors(d, m):
        for p in _vectors(d, n):
            tally[reduced_form(s, p)] += 1
    return tally


def test_growth_matrix_reference():
    assert growth_matrix((6, 1), (2, 3, 2)) == ((1, 2, 1), (-4, -3, -4))


def test_reduction_reference():
    rec = reduce((6, 1), (2, 3, 2))
    assert rec.reduced == ((2, 1), (1, 1, 1))
    # divisor z11 z12^2 z13
    assert rec.divisor_exponents == ((1, 2, 1), (0, 0, 0))


def test_downward_closure_has_unique_minimum():
    nodes = downward_closure((6, 1), (2, 3, 2))
    minima = [q for q in nodes if is_reduced(q)]
    assert minima == [((2, 1), (1, 1, 1))]
    assert len(nodes) == 12


def test_reduce_is_idempotent_and_minimal():
    for d in range(1, 6):
        for s in _vectors(d, 3):
            for p in _vectors(d, 2):
                r = reduce(s, p).reduced
                assert is_reduced(r)
                assert reduce(r).reduced == r


def test_covers_are_legal_multiplications():
    for q in poset_covers((2, 1), (1, 1, 1)):
        assert reduce(q).reduced == ((2, 1), (1, 1, 1))


def test_normalize():
    assert normalize((1, 1, 1), (2, 1)) == (((2, 1), (1, 1, 1)), True)
    assert normalize((1, 2), (2, 1)) == (((2, 1), (1, 2)), True)
    assert normalize((0, 2, 1), (3, 0)) == (((3,), (2, 1)), True)


def test_dupto3_table():
    # g and A for the four reduced pairs of degree <= 3
    assert growth_potential((1, 1), (1, 1)) == 4
    assert growth_potential((2, 1), (1, 1, 1)) == 3
    assert growth_potential((1, 2), (1, 1, 1)) == 3
    assert growth_potential((1, 1, 1), (1, 1, 1)) == 0
    for d in range(2, 9):
        assert count_A((1, 1), (1, 1), d) == 4 * (d - 2) + (d == 2)
        if d >= 3:
            assert count_A((2, 1), (1, 1, 1), d) == comb(d - 1, 2)
            assert count_A((1, 2), (1, 1, 1), d) == comb(d - 1, 2)
            assert count_A((1, 1, 1), (1, 1, 1), d) == (d == 3)


@pytest.mark.parametrize("m,n,d", [(2, 2, 4), (2, 3, 5), (3, 3, 4), (3, 2, 6), (2, 4, 4), (3, 3, 5)])
def test_block_multiplicities_match_brute_force(m, n, d):
    n0, blocks = block_multiplicities(m, n, d)
    tally = brute_blocks(m, n, d)
    zero = tally.pop(((), ()), 0)
    assert n0 == zero
    assert {b.pair: b.multiplicity for b in blocks} == dict(tally)


def test_count_A_against_brute_force():
    for d in range(3, 8):
        want = Counter()
        for s in _vectors(d, 2):
            for p in _vectors(d, 3):
                if 0 in s or 0 in p:
                    continue
                want[reduced_form(s, p)] += 1
        for pair, c in want.items():
            if pair.sigma and len(pair.pi) == 3 and len(pair.sigma) == 2:
                assert count_A(pair.sigma, pair.pi, d) == c


def test_dimension_identity():
    for m, n, d in product(range(1, 4), range(1, 4), range(6)):
        n0, blocks = block_multiplicities(m, n, d)
        total = n0 + sum(b.multiplicity * count_tables(*b.pair) for b in blocks)
        assert total == comb(m * n + d - 1, d)


def test_n_zero_formula():
    assert n_zero(2, 2, 5) == 20  # 4d
    assert n_zero(3, 4, 2) == comb(5, 2) * 3 + comb(4, 2) * 4 - 12


def test_block_multiplicity_symmetric_case():
    assert block_multiplicity((1, 1, 1), (1, 1, 1), 4, 5, 3) == comb(4, 3) * comb(5, 3)
    assert block_multiplicity((2, 1), (1, 1, 1), 3, 3, 4) == comb(3, 2) * 2 * comb(3, 2) * comb(3, 3)


def test_reduced_pair_enumeration():
    pairs = enumerate_reduced_pairs(3, 3, 3)
    assert set(pairs) == {((1, 1), (1, 1)), ((2, 1), (1, 1, 1)), ((1, 2), (1, 1, 1)), ((1, 1, 1), (1, 1, 1))}


def test_invalid():
    with pytest.raises(InvalidInputError):
        count_A((2, 2), (3, 1), 4)  # not reduced
    with pytest.raises(InvalidInputError):
        reduce((1, 2), (1, 1))
