"""Contingency tables with fixed margins.

A table is stored as a tuple of row tuples of nonnegative ints.  Tables in
one weight space are ordered by reading entries down the columns, left to
right, and comparing the resulting vectors lexicographically; the *larger*
vector comes first.  This is the order in which biletters are inserted by
RSK, so the first table of every weight space is the canonical one.
"""

import os
from functools import lru_cache
from typing import NamedTuple

from ._validation import check_table, check_weight_pair
from .exceptions import CapacityError, InfeasibleSwapError

DEFAULT_MAX_BASIS = 2_000_000


def max_basis_size():
    """Configured cap on weight-space dimension (env ``RSKOP_MAX_BASIS``)."""
    return int(os.environ.get("RSKOP_MAX_BASIS", DEFAULT_MAX_BASIS))


class SwapMove(NamedTuple):
    """Add +1 at (r, c), (r2, c2) and -1 at (r, c2), (r2, c).  1-based."""

    r: int
    r2: int
    c: int
    c2: int


def margins(alpha):
    rows = tuple(sum(r) for r in alpha)
    cols = tuple(sum(c) for c in zip(*alpha)) if alpha else ()
    return rows, cols


def order_key(alpha):
    """Column-major entry vector; larger key means earlier in the basis."""
    return tuple(x for col in zip(*alpha) for x in col)


def transpose(alpha):
    return tuple(zip(*alpha))


@lru_cache(maxsize=4096)
def _count(rows, cols):
    if not cols:
        return 1 if not any(rows) else 0
    first, rest = cols[0], cols[1:]
    total = 0
    # distribute the first column among the rows
    for col in _compositions_bounded(first, rows):
        total += _count(tuple(r - c for r, c in zip(rows, col)), rest)
    return total


def _compositions_bounded(total, bounds):
    if not bounds:
        if total == 0:
            yield ()
        return
    cap = sum(bounds[1:])
    for x in range(min(total, bounds[0]), max(0, total - cap) - 1, -1):
        for tail in _compositions_bounded(total - x, bounds[1:]):
            yield (x,) + tail


def count_tables(sigma, pi):
    """|Cont_{sigma,pi}| by dynamic programming over columns."""
    sigma, pi = check_weight_pair(sigma, pi)
    return _count(sigma, pi)


def iter_tables(sigma, pi):
    """Yield Cont_{sigma,pi} in basis order without materializing it.

    Cells are filled column by column, top to bottom, trying the largest
    feasible value first, so the output is already sorted.
    """
    sigma, pi = check_weight_pair(sigma, pi)
    m, n = len(sigma), len(pi)
    if m == 0 or n == 0:
        if sum(sigma) == 0:
            yield tuple(() for _ in range(m)) if n == 0 else ()
        return
    row_rem = list(sigma)
    entries = [[0] * n for _ in range(m)]
    # suffix sums of remaining row capacity below row i, recomputed per column
    cells = [(i, j) for j in range(n) for i in range(m)]

    def rec(k, col_rem):
        if k == len(cells):
            yield tuple(tuple(r) for r in entries)
            return
        i, j = cells[k]
        if j == n - 1:
            # last column is forced
            if all(row_rem[r] >= 0 for r in range(m)) and sum(row_rem) == pi[j]:
                for r in range(m):
                    entries[r][j] = row_rem[r]
                yield tuple(tuple(r) for r in entries)
                for r in range(m):
                    entries[r][j] = 0
            return
        below = sum(row_rem[i + 1:])
        hi = min(row_rem[i], col_rem)
        lo = max(0, col_rem - below)
        for x in range(hi, lo - 1, -1):
            entries[i][j] = x
            row_rem[i] -= x
            nxt = col_rem - x
            if i == m - 1:
                nxt = pi[j + 1]
            yield from rec(k + 1, nxt)
            row_rem[i] += x
        entries[i][j] = 0

    yield from rec(0, pi[0])


def enumerate_tables(sigma, pi, cap=None):
    """Cont_{sigma,pi} as a list in basis order.

    Raises CapacityError if the basis would exceed ``cap`` (default from
    :func:`max_basis_size`).
    """
    sigma, pi = check_weight_pair(sigma, pi)
    cap = max_basis_size() if cap is None else cap
    size = count_tables(sigma, pi)
    if size > cap:
        raise CapacityError(f"Cont_{{{sigma},{pi}}}", size, cap)
    return list(iter_tables(sigma, pi))


def canonical_table(sigma, pi):
    """North-west corner filling; the lex-maximum table of the weight space."""
    sigma, pi = check_weight_pair(sigma, pi)
    row_rem = list(sigma)
    out = [[0] * len(pi) for _ in sigma]
    for j, c in enumerate(pi):
        for i in range(len(sigma)):
            x = min(row_rem[i], c)
            out[i][j] = x
            row_rem[i] -= x
            c -= x
    return tuple(tuple(r) for r in out)


def apply_swap(alpha, s):
    alpha = check_table(alpha)
    r, r2, c, c2 = (x - 1 for x in s)
    if r == r2 or c == c2:
        raise InfeasibleSwapError(f"degenerate swap {tuple(s)}")
    m, n = len(alpha), len(alpha[0]) if alpha else 0
    if not (0 <= r < m and 0 <= r2 < m and 0 <= c < n and 0 <= c2 < n):
        raise InfeasibleSwapError(f"swap {tuple(s)} out of range for a {m}x{n} table")
    out = [list(row) for row in alpha]
    out[r][c] += 1
    out[r2][c2] += 1
    out[r][c2] -= 1
    out[r2][c] -= 1
    if out[r][c2] < 0 or out[r2][c] < 0:
        raise InfeasibleSwapError(f"swap {tuple(s)} makes an entry negative")
    return tuple(tuple(row) for row in out)


def feasible_swaps(alpha):
    """All swap moves that keep ``alpha`` nonnegative."""
    m = len(alpha)
    n = len(alpha[0]) if alpha else 0
    out = []
    for r in range(m):
        for r2 in range(m):
            if r2 == r:
                continue
            for c in range(n):
                for c2 in range(n):
                    if c2 != c and alpha[r][c2] > 0 and alpha[r2][c] > 0:
                        out.append(SwapMove(r + 1, r2 + 1, c + 1, c2 + 1))
    return out
