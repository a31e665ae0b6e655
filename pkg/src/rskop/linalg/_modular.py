"""Word-size modular kernels and Chinese remaindering.

Primes sit just below 2**26 so a product of two residues fits in 52 bits
and a dot product of up to 2**11 such terms stays inside int64.
"""

from functools import lru_cache

import numpy as np

PRIME_BITS = 26
_MAX_INNER = 1 << 10  # chunk length for dot products


def _is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def prime(i):
    """The i-th prime below 2**PRIME_BITS, counting downward."""
    start = (1 << PRIME_BITS) - 1 if i == 0 else prime(i - 1) - 2
    p = start
    while not _is_prime(p):
        p -= 2
    return p


def primes_for_bound(bound):
    """Enough primes that their product exceeds 2 * bound + 1."""
    out, prod_ = [], 1
    i = 0
    while prod_ <= 2 * bound + 1:
        p = prime(i)
        out.append(p)
        prod_ *= p
        i += 1
    return out


def reduce_matrix(a, p):
    return np.array([[x % p for x in row] for row in a], dtype=np.int64)


def matmul_mod(a, b, p):
    n = a.shape[1]
    if n <= _MAX_INNER:
        return (a @ b) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for s in range(0, n, _MAX_INNER):
        out = (out + (a[:, s:s + _MAX_INNER] @ b[s:s + _MAX_INNER]) % p) % p
    return out


def det_mod(a, p):
    a = a.copy()
    n = a.shape[0]
    det = 1
    for j in range(n):
        nz = np.nonzero(a[j:, j])[0]
        if nz.size == 0:
            return 0
        i = j + nz[0]
        if i != j:
            a[[i, j]] = a[[j, i]]
            det = -det
        piv = int(a[j, j])
        det = det * piv % p
        inv = pow(piv, -1, p)
        if j + 1 < n:
            f = (a[j + 1:, j] * inv) % p
            a[j + 1:, j:] = (a[j + 1:, j:] - np.outer(f, a[j, j:]) % p) % p
    return det % p


def inverse_mod(a, p):
    """Inverse of ``a`` mod p, or None when singular mod p."""
    n = a.shape[0]
    aug = np.concatenate([a % p, np.eye(n, dtype=np.int64)], axis=1)
    for j in range(n):
        nz = np.nonzero(aug[j:, j])[0]
        if nz.size == 0:
            return None
        i = j + nz[0]
        if i != j:
            aug[[i, j]] = aug[[j, i]]
        inv = pow(int(aug[j, j]), -1, p)
        aug[j] = aug[j] * inv % p
        f = aug[:, j].copy()
        f[j] = 0
        aug = (aug - np.outer(f, aug[j]) % p) % p
    return aug[:, n:]


def charpoly_mod(a, p):
    """Characteristic polynomial mod p, ascending coefficients, via Hessenberg form."""
    h = a.copy() % p
    n = h.shape[0]
    for j in range(n - 2):
        nz = np.nonzero(h[j + 1:, j])[0]
        if nz.size == 0:
            continue
        i = j + 1 + nz[0]
        if i != j + 1:
            h[[i, j + 1]] = h[[j + 1, i]]
            h[:, [i, j + 1]] = h[:, [j + 1, i]]
        inv = pow(int(h[j + 1, j]), -1, p)
        f = (h[j + 2:, j] * inv) % p
        if not f.any():
            continue
        # row_r -= f_r * row_{j+1}, then col_{j+1} += sum_r f_r * col_r
        h[j + 2:] = (h[j + 2:] - np.outer(f, h[j + 1]) % p) % p
        h[:, j + 1] = (h[:, j + 1] + matmul_mod(h[:, j + 2:], f.reshape(-1, 1), p)[:, 0]) % p
    # p_k(t) = (t - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{i<r<=k} h_{r,r-1}) p_{i-1}
    polys = [np.array([1], dtype=np.int64)]
    for k in range(n):
        cur = np.zeros(k + 2, dtype=np.int64)
        prev = polys[-1]
        cur[1:] = prev
        cur[:k + 1] = (cur[:k + 1] - h[k, k] * prev) % p
        prod_ = 1
        for i in range(k - 1, -1, -1):
            prod_ = prod_ * int(h[i + 1, i]) % p
            if not prod_:
                break
            c = int(h[i, k]) * prod_ % p
            if c:
                q = polys[i]
                cur[:len(q)] = (cur[:len(q)] - c * q) % p
        polys.append(cur % p)
    return [int(x) for x in polys[-1]]


def crt_lift(residues, primes):
    """Combine residue lists (one per prime) into symmetric integer values."""
    m = 1
    vals = [0] * len(residues[0])
    for res, p in zip(residues, primes):
        # Garner step: x = vals + m * t with t = (r - vals) / m mod p
        minv = pow(m % p, -1, p)
        new = []
        for v, r in zip(vals, res):
            t = (int(r) - v) * minv % p
            new.append(v + m * t)
        vals = new
        m *= p
    half = m // 2
    return [v - m if v > half else v for v in vals]
