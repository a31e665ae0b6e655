"""Named invariant suites, runnable from the CLI (``rskop verify``).

Each check is quick and self-contained; a suite returns one record per
check so a caller can report partial failures.
"""

import traceback
from itertools import product
from math import comb
from typing import NamedTuple

from . import analysis, linalg
from .bitableau import bitableau_of, evaluate_all_ones, expand
from .exceptions import InvalidInputError
from .contingency import apply_swap, canonical_table, count_tables, enumerate_tables, feasible_swaps, margins
from .operators import build_inverse, build_matrix, matrix_A_d, matrix_M_pi, permutation_entry
from .tableaux import biword, bump_chains, inverse_rsk, is_antidiagonal, rsk
from .weights import block_multiplicities, reduce


class CheckResult(NamedTuple):
    suite: str
    name: str
    ok: bool
    detail: str = ""


def _weights(d, length):
    return [c for c in product(range(d + 1), repeat=length) if sum(c) == d]


def _small_pairs(d_max=4, m_max=3, n_max=3):
    for d in range(1, d_max + 1):
        for m in range(1, m_max + 1):
            for n in range(1, n_max + 1):
                for s in _weights(d, m):
                    for p in _weights(d, n):
                        yield s, p


def _rsk_roundtrip():
    for s, p in _small_pairs(4):
        for a in enumerate_tables(s, p):
            if inverse_rsk(rsk(a), len(s), len(p)) != a:
                return False
    return True


def _rsk_symmetry():
    for s, p in _small_pairs(3):
        for a in enumerate_tables(s, p):
            pq = rsk(a)
            if rsk(tuple(zip(*a))) != (pq.q, pq.p):
                return False
    return True


def _chains():
    for s, p in _small_pairs(3):
        for a in enumerate_tables(s, p):
            chains = bump_chains(a)
            letters = sorted(b for c in chains for b in c.biletters)
            if letters != sorted(biword(a)) or not all(is_antidiagonal(c) for c in chains):
                return False
            pq = rsk(a)
            if [tuple(c.value) for c in chains] != list(zip(pq.p[0], pq.q[0])):
                return False
    return True


def _running_example():
    pq = rsk(((0, 3, 2), (1, 2, 0), (2, 0, 2)))
    return pq.p == ((1, 1, 1, 1, 1, 3, 3), (2, 2, 2), (3, 3)) and pq.q == ((1, 1, 1, 2, 2, 3, 3), (2, 2, 2), (3, 3))


def _monomial_count():
    for m, n, d in product(range(1, 4), range(1, 4), range(0, 5)):
        total = sum(count_tables(s, p) for s in _weights(d, m) for p in _weights(d, n))
        if total != comb(m * n + d - 1, d):
            return False
    return True


def _canonical_first():
    for s, p in _small_pairs(4):
        ts = enumerate_tables(s, p)
        if ts[0] != canonical_table(s, p) or len(rsk(ts[0]).p) > 1:
            return False
    return True


def _swaps_preserve_margins():
    for s, p in _small_pairs(3):
        for a in enumerate_tables(s, p):
            for sw in feasible_swaps(a):
                if margins(apply_swap(a, sw)) != margins(a):
                    return False
    return True


def _block_dimensions():
    for m, n, d in product(range(1, 4), range(1, 4), range(0, 6)):
        n0, blocks = block_multiplicities(m, n, d)
        if n0 + sum(b.multiplicity * count_tables(*b.pair) for b in blocks) != comb(m * n + d - 1, d):
            return False
    return True


def _reduce_idempotent():
    for s, p in _small_pairs(5):
        r = reduce(s, p).reduced
        if reduce(r).reduced != r:
            return False
    return True


def _coefficient_sums():
    for a in enumerate_tables((1, 1, 1), (1, 1, 1)) + enumerate_tables((2, 1, 1), (1, 2, 1)):
        b = bitableau_of(rsk(a))
        if expand(b).coefficient_sum() != evaluate_all_ones(b):
            return False
    return True


def _column_sums_and_det():
    for s, p in _small_pairs(4):
        mat = build_matrix(s, p)
        sums = mat.column_sums()
        if sums.count(1) != 1 or sums[0] != 1 or any(x not in (0, 1) for x in sums):
            return False
        if linalg.det(mat.entries) not in (1, -1):
            return False
    return True


def _inverse():
    for pair in [((1, 1, 1), (1, 1, 1)), ((2, 1, 1), (1, 2, 1)), ((4, 3), (2, 2, 3))]:
        mat = build_matrix(*pair)
        inv = build_inverse(*pair, matrix=mat)
        if not linalg.matrix.is_identity(linalg.mat_mul(inv.entries, mat.entries)):
            return False
    return True


def _closed_forms():
    for d in range(2, 6):
        if matrix_A_d(d).entries != build_matrix((d - 1, 1), (1,) * d).entries:
            return False
    for pi in [(2, 1, 1), (3, 2, 3), (2, 2), (3, 1, 2)]:
        if matrix_M_pi(pi).entries != build_matrix((pi[0], sum(pi) - pi[0]), pi).entries:
            return False
    mat = build_matrix((1, 1, 1), (1, 1, 1))
    return all(permutation_entry(b, a) == mat.entries[i][j]
               for i, b in enumerate(mat.basis) for j, a in enumerate(mat.basis))


def _cayley_hamilton():
    for pair in [((1, 1, 1), (1, 1, 1)), ((2, 1, 1), (1, 2, 1)), ((4, 3), (2, 2, 3)), ((2, 1, 1), (2, 1, 1))]:
        mat = build_matrix(*pair).entries
        cp = linalg.char_poly(mat)
        mu = linalg.min_poly(mat, cp)
        if not linalg.annihilates(cp, mat) or not linalg.annihilates(mu, mat) or not mu.divides(cp):
            return False
    return True


def _formula_vs_direct():
    for m, n, d in product(range(1, 3), range(1, 4), range(1, 4)):
        if analysis.det_rsk(m, n, d) != analysis.det_rsk_direct(m, n, d):
            return False
        if analysis.trace_rsk(m, n, d) != analysis.trace_rsk_direct(m, n, d):
            return False
    return True


def _sweep_vs_reference():
    return all(analysis.permutation_sweep(d) == analysis.permutation_sweep_reference(d) for d in range(1, 6))


def _classification():
    for m, n, d in product(range(1, 4), range(1, 4), range(1, 6)):
        res = analysis.classify_diagonalizable(m, n, d)
        if res.diagonalizable != analysis.diagonalizable_by_blocks(m, n, d)[0]:
            return False
    return True


SUITES = {
    "rsk": [
        ("running example", _running_example),
        ("roundtrip degree <= 4", _rsk_roundtrip),
        ("transpose symmetry", _rsk_symmetry),
        ("bump chains", _chains),
    ],
    "contingency": [
        ("monomial count", _monomial_count),
        ("canonical table first", _canonical_first),
        ("swaps keep margins", _swaps_preserve_margins),
    ],
    "weights": [
        ("block dimension identity", _block_dimensions),
        ("reduction idempotent", _reduce_idempotent),
    ],
    "bitableau": [
        ("coefficient sums", _coefficient_sums),
    ],
    "operator": [
        ("column sums and unit determinant", _column_sums_and_det),
        ("exact inverse", _inverse),
        ("closed forms", _closed_forms),
    ],
    "linalg": [
        ("Cayley-Hamilton and min poly", _cayley_hamilton),
    ],
    "analysis": [
        ("det/trace formula vs direct", _formula_vs_direct),
        ("sweep vs reference", _sweep_vs_reference),
        ("classification vs blocks", _classification),
    ],
}


def run_suite(name):
    names = list(SUITES) if name == "all" else [name]
    out = []
    for suite in names:
        if suite not in SUITES:
            raise InvalidInputError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
        for check, fn in SUITES[suite]:
            try:
                ok = bool(fn())
                out.append(CheckResult(suite, check, ok))
            except Exception as e:  # report, do not abort the remaining checks
                out.append(CheckResult(suite, check, False, f"{type(e).__name__}: {e}"
                                       + "\n" + traceback.format_exc(limit=2)))
    return out
