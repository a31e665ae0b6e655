"""Partitions, semistandard tableaux and RSK row insertion.

Conventions follow the usual reading of a nonnegative matrix as a biword:
entries are read down each column, left to right, and entry alpha[i][j]
contributes that many copies of the biletter (i+1 | j+1).  Row labels are
inserted into P and column labels recorded in Q.  Note that this is the
transpose of the convention in Fulton's and Stanley's books, so their
(P, Q) is our (Q, P).

Tableaux are tuples of row tuples with 1-based labels; the empty tableau
is ().
"""

from bisect import bisect_right
from typing import NamedTuple

from ._validation import check_table, check_tableau, check_tableau_pair, check_weight_pair
from .exceptions import InvalidPairError


class Biletter(NamedTuple):
    row: int
    col: int

    def __str__(self):
        return f"({self.row}|{self.col})"


class TableauPair(NamedTuple):
    p: tuple
    q: tuple

    @property
    def shape(self):
        return shape_of(self.p)


class BumpChain(NamedTuple):
    """Biletters whose insertion passed through first-row box ``column``."""

    column: int
    biletters: tuple

    @property
    def value(self):
        # the last biletter's row label and the first biletter's column label
        return Biletter(self.biletters[-1].row, self.biletters[0].col)


def shape_of(t):
    return tuple(len(r) for r in t)


def content(t, m=None):
    """Multiplicities of labels 1..m in ``t``."""
    top = max((x for r in t for x in r), default=0)
    m = top if m is None else max(m, top)
    out = [0] * m
    for r in t:
        for x in r:
            out[x - 1] += 1
    return tuple(out)


def conjugate(shape):
    shape = tuple(shape)
    return tuple(sum(1 for s in shape if s > j) for j in range(shape[0] if shape else 0))


def is_partition(parts):
    parts = tuple(parts)
    return all(p >= 1 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def columns(t):
    """Columns of a tableau, top to bottom."""
    if not t:
        return ()
    return tuple(tuple(r[j] for r in t if len(r) > j) for j in range(len(t[0])))


def biword(alpha):
    """Biletters of ``alpha`` in insertion order."""
    alpha = check_table(alpha)
    out = []
    n = len(alpha[0]) if alpha else 0
    for j in range(n):
        for i in range(len(alpha)):
            out.extend([Biletter(i + 1, j + 1)] * alpha[i][j])
    return out


def _insert(rows, p):
    # in-place row insertion on a list of lists; returns (row, col) 0-based
    r = 0
    while True:
        if r == len(rows):
            rows.append([p])
            return r, 0
        row = rows[r]
        k = bisect_right(row, p)
        if k == len(row):
            row.append(p)
            return r, k
        row[k], p = p, row[k]
        r += 1


def row_insert(t, p):
    """Insert label ``p`` into tableau ``t``.

    Returns the new tableau and the 1-based (row, col) of the added box.
    """
    t = check_tableau(t)
    if isinstance(p, bool) or int(p) != p or p < 1:
        raise ValueError(f"label must be a positive integer, got {p!r}")
    rows = [list(r) for r in t]
    r, c = _insert(rows, int(p))
    return tuple(tuple(x) for x in rows), (r + 1, c + 1)


def rsk(alpha):
    """RSK image (P, Q) of a nonnegative integer matrix."""
    p_rows, q_rows = [], []
    for b in biword(alpha):
        r, c = _insert(p_rows, b.row)
        if r == len(q_rows):
            q_rows.append([])
        q_rows[r].append(b.col)
    return TableauPair(tuple(map(tuple, p_rows)), tuple(map(tuple, q_rows)))


def inverse_rsk(pair, m=None, n=None):
    """Recover the matrix from a pair of equal-shape tableaux.

    The matrix has ``m`` rows and ``n`` columns, defaulting to the largest
    labels of P and Q.  The empty pair gives ().
    """
    p, q = check_tableau_pair(*pair)
    m0 = max((x for r in p for x in r), default=0)
    n0 = max((x for r in q for x in r), default=0)
    m = m0 if m is None else m
    n = n0 if n is None else n
    if m < m0 or n < n0:
        raise InvalidPairError(f"labels exceed the requested {m}x{n} size")
    if m == 0 or n == 0:
        return ()
    p_rows = [list(r) for r in p]
    q_rows = [list(r) for r in q]
    alpha = [[0] * n for _ in range(m)]
    for _ in range(sum(map(len, p_rows))):
        # equal labels of Q form a horizontal strip, so the rightmost copy
        # of the largest label ends the uppermost row that contains it
        best, br = -1, -1
        for r, row in enumerate(q_rows):
            if row[-1] > best:
                best, br = row[-1], r
        q_rows[br].pop()
        x = p_rows[br].pop()
        if not p_rows[br]:
            p_rows.pop()
            q_rows.pop()
        for r in range(br - 1, -1, -1):
            row = p_rows[r]
            k = bisect_right(row, x - 1) - 1  # rightmost entry < x
            row[k], x = x, row[k]
        alpha[x - 1][best - 1] += 1
    return tuple(map(tuple, alpha))


def bump_chains(alpha):
    """Bump chains of ``alpha``, one per first-row box, in box order.

    A biletter (p|q) joins chain c when p is placed into box c of the first
    row, either by bumping the previous occupant or by appending.
    """
    first = []
    chains = []
    for b in biword(alpha):
        k = bisect_right(first, b.row)
        if k == len(first):
            first.append(b.row)
            chains.append([b])
        else:
            first[k] = b.row
            chains[k].append(b)
    return [BumpChain(c + 1, tuple(ch)) for c, ch in enumerate(chains)]


# ---- enumeration ---------------------------------------------------------

def _horizontal_strips(inner, k, max_rows):
    """Shapes mu containing ``inner`` with mu/inner a horizontal strip of size k."""
    inner = list(inner)
    rows = len(inner)
    bounds = []
    for i in range(min(rows + 1, max_rows)):
        cap = (inner[i - 1] if i else 10 ** 9) - (inner[i] if i < rows else 0)
        bounds.append(cap)

    def rec(i, left):
        if i == len(bounds):
            if left == 0:
                yield ()
            return
        for x in range(min(left, bounds[i]), -1, -1):
            for tail in rec(i + 1, left - x):
                yield (x,) + tail

    for add in rec(0, k):
        mu = [(inner[i] if i < rows else 0) + (add[i] if i < len(add) else 0)
              for i in range(max(rows, len(add)))]
        yield tuple(x for x in mu if x)


def enumerate_ssyt(shape, weight):
    """All semistandard tableaux of ``shape`` with content ``weight``."""
    shape = tuple(shape)
    weight = tuple(weight)
    if sum(shape) != sum(weight):
        return []
    out = []

    def rec(label, inner, rows):
        if label == len(weight):
            if inner == shape:
                out.append(tuple(tuple(r) for r in rows))
            return
        for mu in _horizontal_strips(inner, weight[label], len(shape)):
            if len(mu) > len(shape) or any(a > b for a, b in zip(mu, shape)):
                continue
            new = [list(r) for r in rows] + [[] for _ in range(len(mu) - len(rows))]
            for i, x in enumerate(mu):
                new[i].extend([label + 1] * (x - (inner[i] if i < len(inner) else 0)))
            rec(label + 1, mu, new)

    rec(0, (), [])
    return out


def partitions(d, max_len=None):
    """Partitions of ``d`` in reverse lexicographic order."""
    max_len = d if max_len is None else max_len

    def rec(left, cap, k):
        if left == 0:
            yield ()
            return
        if k == 0:
            return
        for x in range(min(left, cap), 0, -1):
            for tail in rec(left - x, x, k - 1):
                yield (x,) + tail

    return list(rec(d, d, max_len))


def enumerate_ssyt_pairs(sigma, pi):
    """Index set of the bitableau basis of the (sigma, pi) weight space.

    Pairs are found directly as tableaux of common shape with contents
    sigma and pi, then sorted so that the k-th pair is the RSK image of the
    k-th contingency table.
    """
    from .contingency import order_key

    sigma, pi = check_weight_pair(sigma, pi)
    d = sum(sigma)
    pairs = []
    for lam in partitions(d, min(len(sigma), len(pi))):
        ps = enumerate_ssyt(lam, sigma)
        if not ps:
            continue
        qs = enumerate_ssyt(lam, pi)
        pairs.extend(TableauPair(p, q) for p in ps for q in qs)
    pairs.sort(key=lambda pq: order_key(inverse_rsk(pq, len(sigma), len(pi))), reverse=True)
    return pairs


def is_antidiagonal(chain):
    bs = chain.biletters
    return all(a.row > b.row and a.col < b.col for a, b in zip(bs, bs[1:]))

