"""RSK as a matrix on a weight space, plus closed-form families.

Column alpha of RSK_{sigma,pi} lists the monomial coefficients of the
bitableau attached to rsk(alpha), with rows and columns both indexed by
the ordered contingency tables of the weight space.
"""

from math import comb, prod
from typing import NamedTuple

import numpy as np

from ._validation import check_table, check_weight
from .bitableau import Expander, bitableau_of, expand
from .contingency import count_tables, enumerate_tables, margins
from .exceptions import ConsistencyError, InvalidInputError
from .linalg import inverse_integral
from .tableaux import columns, rsk
from .weights import WeightPair, as_pair, block_multiplicities, normalize


class RskMatrix:
    """Square integer matrix over an ordered basis of contingency tables."""

    def __init__(self, pair, basis, entries, inverse=False):
        self.pair = pair
        self.basis = list(basis)
        self.entries = entries
        self.inverse = inverse
        self._index = None

    @property
    def dim(self):
        return len(self.basis)

    @property
    def shape(self):
        return (self.dim, self.dim)

    def index(self, table):
        if self._index is None:
            self._index = {t: i for i, t in enumerate(self.basis)}
        return self._index[check_table(table)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def entry(self, beta, alpha):
        return self.entries[self.index(beta)][self.index(alpha)]

    def __eq__(self, other):
        if isinstance(other, RskMatrix):
            return self.basis == other.basis and self.entries == other.entries
        return self.entries == [list(r) for r in other]

    def __repr__(self):
        tag = "RSK^-1" if self.inverse else "RSK"
        return f"<{tag}_{self.pair} dim={self.dim}>"

    def tolist(self):
        return [list(r) for r in self.entries]

    def to_numpy(self):
        return np.array(self.entries, dtype=object)

    def column_sums(self):
        return [sum(col) for col in zip(*self.entries)] if self.entries else []


class BlockDecomposition(NamedTuple):
    m: int
    n: int
    d: int
    n0: int
    blocks: list  # (WeightPair, multiplicity, RskMatrix or None)

    @property
    def total_dim(self):
        return self.n0 + sum(mult * (mat.dim if mat is not None else count_tables(*p))
                             for p, mult, mat in self.blocks)


def _column(ex, alpha, index):
    b = bitableau_of(rsk(alpha))
    out = {}
    for key, c in ex.expand_keys(b.minors).items():
        row = index.get(key)
        if row is None:
            raise ConsistencyError(f"expansion of rsk({alpha}) leaves the weight space")
        out[row] = c
    return out


def build_matrix(sigma, pi=None, cap=None):
    """RSK_{sigma,pi} by expanding the bitableau of every basis table."""
    pair = as_pair(sigma, pi)
    basis = enumerate_tables(pair.sigma, pair.pi, cap=cap)
    n = len(basis)
    ex = Expander(len(pair.sigma), len(pair.pi), pair.degree + 1)
    index = {ex.table_key(t): i for i, t in enumerate(basis)}
    entries = [[0] * n for _ in range(n)]
    for j, alpha in enumerate(basis):
        for i, c in _column(ex, alpha, index).items():
            entries[i][j] = c
    return RskMatrix(pair, basis, entries)


def build_inverse(sigma, pi=None, cap=None, matrix=None):
    """Inverse of RSK_{sigma,pi} by exact elimination.

    This stands in for straightening standard bitableaux back into
    monomials.  A non-integral inverse raises ConsistencyError.
    """
    mat = build_matrix(sigma, pi, cap=cap) if matrix is None else matrix
    inv = inverse_integral(mat.entries) if mat.dim else []
    return RskMatrix(mat.pair, mat.basis, inv, inverse=True)


def matrix_entry(beta, alpha):
    """Single entry RSK(beta, alpha) without building the whole matrix."""
    alpha, beta = check_table(alpha), check_table(beta)
    if margins(alpha) != margins(beta):
        raise InvalidInputError("beta and alpha lie in different weight spaces")
    poly = expand(bitableau_of(rsk(alpha)), len(alpha), len(alpha[0]) if alpha else 0)
    return poly.terms.get(beta, 0)


# ---- closed forms --------------------------------------------------------

def _det_small(rows):
    from .linalg.matrix import det_bareiss

    return det_bareiss(rows) if rows else 1


def _minor_product(beta, alpha):
    pq = rsk(alpha)
    out = 1
    for r, c in zip(columns(pq.p), columns(pq.q)):
        sub = [[beta[i - 1][j - 1] for j in c] for i in r]
        out *= _det_small(sub)
        if not out:
            return 0
    return out


def _is_permutation_matrix(a):
    return (all(sum(r) == 1 for r in a) and all(sum(c) == 1 for c in zip(*a))
            and all(x in (0, 1) for r in a for x in r))


def permutation_entry(beta, alpha):
    """Entry of RSK_{1^d,1^d} as a product of partial permutation determinants."""
    beta, alpha = check_table(beta), check_table(alpha)
    if not (_is_permutation_matrix(beta) and _is_permutation_matrix(alpha)) or len(beta) != len(alpha):
        raise InvalidInputError("permutation_entry needs two permutation matrices of one size")
    w = {i + 1: row.index(1) + 1 for i, row in enumerate(beta)}
    pq = rsk(alpha)
    sign = 1
    for r, c in zip(columns(pq.p), columns(pq.q)):
        img = [w[i] for i in r]
        if sorted(img) != list(c):
            return 0
        # sign of the bijection r -> c read in increasing order
        pos = [c.index(x) for x in img]
        for i in range(len(pos)):
            for j in range(i + 1, len(pos)):
                if pos[i] > pos[j]:
                    sign = -sign
    return sign


def voting_entry(beta, alpha):
    """Entry of RSK_{sigma,1^d} with two-part sigma as a product of minors."""
    beta, alpha = check_table(beta), check_table(alpha)
    mb, ma = margins(beta), margins(alpha)
    if mb != ma or len(alpha) != 2 or any(x != 1 for x in ma[1]):
        raise InvalidInputError("voting_entry needs tables with margins (sigma, 1^d), len(sigma) = 2")
    return _minor_product(beta, alpha)


def matrix_A_d(d):
    """RSK_{(d-1)1, 1^d} in closed form."""
    if d < 2:
        raise InvalidInputError("A_d needs d >= 2")
    a = [[0] * d for _ in range(d)]
    a[0][0] = a[0][1] = 1
    for i in range(1, d - 1):
        a[i][i + 1] = 1
    for j in range(1, d):
        a[d - 1][j] = -1
    pair = WeightPair((d - 1, 1), (1,) * d)
    return RskMatrix(pair, enumerate_tables(*pair), a)


def is_triangular(sigma, pi):
    return len(sigma) == 2 and len(pi) >= 1 and sigma[0] == pi[0] and 0 not in pi


def bounded_compositions(pi):
    """Comp(pi): compositions of pi_1 bounded entrywise by pi, lex descending."""
    pi = tuple(pi)

    def rec(j, left):
        if j == len(pi):
            if left == 0:
                yield ()
            return
        rest = sum(pi[j + 1:])
        for x in range(min(left, pi[j]), max(0, left - rest) - 1, -1):
            for tail in rec(j + 1, left - x):
                yield (x,) + tail

    return list(rec(0, pi[0]))


def matrix_M_pi(pi):
    """M_pi for the triangular pair ((pi_1, |pi| - pi_1), pi)."""
    pi = check_weight(pi, "pi")
    if len(pi) < 2 or 0 in pi:
        raise InvalidInputError(f"{pi} does not give a triangular pair")
    comps = bounded_compositions(pi)
    a = [[(-1) ** (pi[0] - r[0]) * prod(comb(t[j], r[j]) for j in range(1, len(pi)))
          for t in comps] for r in comps]
    sigma = (pi[0], sum(pi) - pi[0])
    if sigma[1] == 0:
        raise InvalidInputError(f"{pi} does not give a triangular pair")
    basis = [(r, tuple(p - x for p, x in zip(pi, r))) for r in comps]
    return RskMatrix(WeightPair(sigma, pi), basis, a)


def triangular_eigen_multiplicities(pi):
    """Multiplicities of the eigenvalues +1 and -1 of M_pi."""
    pi = check_weight(pi, "pi")
    if len(pi) < 2 or 0 in pi or sum(pi) == pi[0]:
        raise InvalidInputError(f"{pi} does not give a triangular pair")
    comps = bounded_compositions(pi)
    plus = sum(1 for r in comps if (pi[0] - r[0]) % 2 == 0)
    return plus, len(comps) - plus


# ---- blocks --------------------------------------------------------------

_BLOCK_CACHE = {}


def cached_block(pair):
    """build_matrix for a normalized pair, shared across callers."""
    key = normalize(pair)[0]
    if key not in _BLOCK_CACHE:
        _BLOCK_CACHE[key] = build_matrix(key)
    return _BLOCK_CACHE[key]


def assemble_blocks(m, n, d, materialize=False):
    n0, mults = block_multiplicities(m, n, d)
    blocks = [(b.pair, b.multiplicity, cached_block(b.pair) if materialize else None)
              for b in mults]
    return BlockDecomposition(m, n, d, n0, blocks)


def _times_variable(poly_keys, key):
    return {a + key: c for a, c in poly_keys.items()}


def check_rsk_commuting_multiplication(sigma, pi, k, l):
    """Directly test whether multiplication by z_kl commutes with RSK.

    Returns a dict with the direct verdict, the inequality predicate
    sigma_k + pi_l >= d, and the first failing table if any.
    """
    pair = as_pair(sigma, pi)
    s, p = pair
    if not (1 <= k <= len(s) and 1 <= l <= len(p)):
        raise InvalidInputError(f"index ({k},{l}) outside a {len(s)}x{len(p)} table")
    d = pair.degree
    ex = Expander(len(s), len(p), d + 2)
    shift = ex.cell_key(k - 1, l - 1)
    failure = None
    source = enumerate_tables(s, p)
    for alpha in source:
        up = [list(r) for r in alpha]
        up[k - 1][l - 1] += 1
        lhs = ex.expand_keys(bitableau_of(rsk(up)).minors)
        rhs = _times_variable(ex.expand_keys(bitableau_of(rsk(alpha)).minors), shift)
        if lhs != rhs:
            failure = alpha
            break
    s2 = s[:k - 1] + (s[k - 1] + 1,) + s[k:]
    p2 = p[:l - 1] + (p[l - 1] + 1,) + p[l:]
    onto = count_tables(s2, p2) == len(source)
    return {
        "pair": pair,
        "k": k,
        "l": l,
        "commutes": failure is None,
        "onto": onto,
        "isomorphism": failure is None and onto,
        "predicate": s[k - 1] + p[l - 1] >= d,
        "failure": failure,
    }


def diagonal_entry_construction(N):
    """A diagonal entry of magnitude N, with its pair, table and value."""
    if N < 1:
        raise InvalidInputError("N must be positive")
    pair = WeightPair((N + 2, N + 1), (N + 1, N + 1, 1))
    table = ((1, N, 1), (N, 1, 0))
    return pair, table, (-1) ** N * N
