"""Bitableaux as products of minors of the generic matrix Z = [z_ij].

A pair of tableaux (P, Q) of common shape gives one minor per column of
the shape: rows taken from that column of P, columns from that column of
Q.  Expansion multiplies out the minor determinants exactly.

Internally a monomial z^alpha is packed into one Python int,
sum alpha_ij * B**(i*n + j) with B larger than any exponent, so that
multiplying monomials is integer addition of keys.
"""

import os
from itertools import permutations
from math import factorial, prod
from typing import NamedTuple

from ._validation import check_tableau_pair
from .exceptions import CapacityError, InvalidPairError
from .tableaux import TableauPair, columns

DEFAULT_MAX_TERMS = 20_000_000


class Minor(NamedTuple):
    rows: tuple
    cols: tuple

    @property
    def size(self):
        return len(self.rows)


class Bitableau(NamedTuple):
    minors: tuple
    source: TableauPair

    @property
    def degree(self):
        return sum(mi.size for mi in self.minors)


class MonomialPoly:
    """Sparse integer polynomial in the entries of an m x n generic matrix.

    ``terms`` maps exponent tables (tuples of row tuples) to nonzero ints.
    """

    def __init__(self, terms, m, n):
        self.m = m
        self.n = n
        self.terms = {k: v for k, v in terms.items() if v}

    def __eq__(self, other):
        if not isinstance(other, MonomialPoly):
            return NotImplemented
        return (self.m, self.n, self.terms) == (other.m, other.n, other.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"MonomialPoly({len(self.terms)} terms, {self.m}x{self.n})"

    def __mul__(self, other):
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("polynomials live in different rings")
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                k = tuple(tuple(u + v for u, v in zip(ra, rb)) for ra, rb in zip(a, b))
                out[k] = out.get(k, 0) + x * y
        return MonomialPoly(out, self.m, self.n)

    def coefficient_sum(self):
        return sum(self.terms.values())

    def to_str(self):
        parts = []
        for a, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"z{i + 1}{j + 1}" + (f"^{e}" if e > 1 else "")
                for i, row in enumerate(a) for j, e in enumerate(row) if e
            ) or "1"
            parts.append(f"{c:+d}*{mono}")
        return " ".join(parts) if parts else "0"


def bitableau_of(pair):
    p, q = check_tableau_pair(*pair)
    minors = tuple(Minor(r, c) for r, c in zip(columns(p), columns(q)))
    return Bitableau(minors, TableauPair(p, q))


def _perm_sign(w):
    sign = 1
    seen = [False] * len(w)
    for i in range(len(w)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = w[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


_PERMS = {}


def _signed_perms(k):
    if k not in _PERMS:
        _PERMS[k] = [(w, _perm_sign(w)) for w in permutations(range(k))]
    return _PERMS[k]


class Expander:
    """Packed-key expansion of bitableaux in a fixed m x n ring.

    ``base`` must exceed every exponent that can appear; the degree plus
    one always works.
    """

    def __init__(self, m, n, base):
        self.m, self.n, self.base = m, n, base
        self._minor_cache = {}

    def cell_key(self, i, j):
        return self.base ** (i * self.n + j)

    def table_key(self, alpha):
        key = 0
        for i, row in enumerate(alpha):
            for j, e in enumerate(row):
                if e:
                    key += e * self.cell_key(i, j)
        return key

    def key_table(self, key):
        out = [[0] * self.n for _ in range(self.m)]
        for pos in range(self.m * self.n):
            key, e = divmod(key, self.base)
            out[pos // self.n][pos % self.n] = e
        return tuple(map(tuple, out))

    def minor(self, rows, cols):
        mk = (rows, cols)
        got = self._minor_cache.get(mk)
        if got is None:
            ck = [[self.cell_key(r - 1, c - 1) for c in cols] for r in rows]
            got = {}
            for w, s in _signed_perms(len(rows)):
                key = sum(ck[t][w[t]] for t in range(len(rows)))
                got[key] = got.get(key, 0) + s
            self._minor_cache[mk] = got
        return got

    def expand_keys(self, minors):
        acc = {0: 1}
        # multiply big minors first; keeps intermediate dicts small
        for mi in sorted(minors, key=lambda x: -len(x.rows)):
            f = self.minor(mi.rows, mi.cols)
            if len(f) == 1:
                ((k, v),) = f.items()
                acc = {a + k: x * v for a, x in acc.items()}
                continue
            out = {}
            for a, x in acc.items():
                for b, y in f.items():
                    key = a + b
                    out[key] = out.get(key, 0) + x * y
            acc = {k: v for k, v in out.items() if v}
        return acc


def max_terms():
    return int(os.environ.get("RSKOP_MAX_TERMS", DEFAULT_MAX_TERMS))


def projected_terms(b):
    """Upper bound on the number of Leibniz terms of a bitableau."""
    return prod(factorial(mi.size) for mi in b.minors)


def expand(b, m=None, n=None, cap=None):
    """Exact expansion of a bitableau into monomials."""
    if isinstance(b, (tuple, list)) and not isinstance(b, Bitableau):
        b = bitableau_of(b)
    cap = max_terms() if cap is None else cap
    size = projected_terms(b)
    if size > cap:
        raise CapacityError("bitableau expansion", size, cap)
    m0 = max((r for mi in b.minors for r in mi.rows), default=0)
    n0 = max((c for mi in b.minors for c in mi.cols), default=0)
    m = m0 if m is None else m
    n = n0 if n is None else n
    if m < m0 or n < n0:
        raise InvalidPairError(f"indices exceed a {m}x{n} generic matrix")
    ex = Expander(m, n, b.degree + 1)
    keys = ex.expand_keys(b.minors)
    return MonomialPoly({ex.key_table(k): v for k, v in keys.items()}, m, n)


def evaluate_all_ones(b):
    """Value of the bitableau at z_ij = 1.

    Any minor of size two or more vanishes on the all-ones matrix, so the
    value is 1 for a one-row shape and 0 otherwise.
    """
    return int(all(mi.size == 1 for mi in b.minors))
