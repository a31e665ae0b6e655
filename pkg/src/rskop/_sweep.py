"""Compiled sweep over permutation matrices for the diagonal of RSK_{1^d,1^d}.

A permutation is held as the sequence u of row labels in insertion order
(u[j] is the row of the 1 in column j), so the biword of the matrix is
(u[0]|1), (u[1]|2), ...  Permutations are visited in lexicographic order
of u, and a chunk is a contiguous range of lexicographic ranks.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _unrank(rank, d, out):
    pool = np.arange(d)
    fact = np.ones(d + 1, dtype=np.int64)
    for i in range(1, d + 1):
        fact[i] = fact[i - 1] * i
    size = d
    for i in range(d):
        f = fact[d - 1 - i]
        k = rank // f
        rank = rank % f
        out[i] = pool[k]
        for t in range(k, size - 1):
            pool[t] = pool[t + 1]
        size -= 1


@njit(cache=True)
def _next_permutation(u):
    d = u.shape[0]
    i = d - 2
    while i >= 0 and u[i] >= u[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = d - 1
    while u[j] <= u[i]:
        j -= 1
    u[i], u[j] = u[j], u[i]
    lo, hi = i + 1, d - 1
    while lo < hi:
        u[lo], u[hi] = u[hi], u[lo]
        lo += 1
        hi -= 1
    return True


@njit(cache=True)
def _diagonal_entry(u, P, Q, rowlen, w, stamp, posc, pos, token):
    d = u.shape[0]
    for r in range(d):
        rowlen[r] = 0
    for step in range(d):
        x = u[step]
        w[x] = step
        r = 0
        while True:
            length = rowlen[r]
            k = 0
            while k < length and P[r, k] < x:
                k += 1
            if k == length:
                P[r, k] = x
                Q[r, k] = step
                rowlen[r] = length + 1
                break
            y = P[r, k]
            P[r, k] = x
            x = y
            r += 1
    entry = 1
    ncols = rowlen[0]
    for c in range(ncols):
        token += 1
        h = 0
        while h < d and rowlen[h] > c:
            q = Q[h, c]
            stamp[q] = token
            posc[q] = h
            h += 1
        for r in range(h):
            j = w[P[r, c]]
            if stamp[j] != token:
                return 0, token
            pos[r] = posc[j]
        for a in range(h):
            for b in range(a + 1, h):
                if pos[a] > pos[b]:
                    entry = -entry
    return entry, token


@njit(cache=True)
def sweep_range(d, start, count):
    """Sum of diagonal entries and number of zero entries over a rank range."""
    u = np.empty(d, dtype=np.int64)
    _unrank(start, d, u)
    P = np.zeros((d, d), dtype=np.int64)
    Q = np.zeros((d, d), dtype=np.int64)
    rowlen = np.zeros(d, dtype=np.int64)
    w = np.zeros(d, dtype=np.int64)
    stamp = np.zeros(d, dtype=np.int64)
    posc = np.zeros(d, dtype=np.int64)
    pos = np.zeros(d, dtype=np.int64)
    token = 0
    total = 0
    zeros = 0
    for _ in range(count):
        e, token = _diagonal_entry(u, P, Q, rowlen, w, stamp, posc, pos, token)
        total += e
        if e == 0:
            zeros += 1
        if not _next_permutation(u):
            break
    return total, zeros
