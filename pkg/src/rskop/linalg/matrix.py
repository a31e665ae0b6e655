"""Exact operations on square integer matrices.

Small matrices go through division-free integer algorithms (Berkowitz,
Bareiss).  Larger ones are handled modulo word-size primes and lifted by
Chinese remaindering under an a priori coefficient bound, so the result is
still exact.
"""

from fractions import Fraction
from math import isqrt

import numpy as np

from ..exceptions import ConsistencyError, InvalidInputError
from . import _modular as mod
from .poly import IntPoly, poly_lcm, squarefree_part

SMALL = 24  # switch to the modular path above this dimension


def as_int_matrix(m):
    """List-of-lists copy of a square integer matrix.

    Accepts nested sequences, numpy arrays, and anything with an
    ``entries`` attribute (such as RskMatrix).
    """
    if hasattr(m, "entries"):
        m = m.entries
    rows = [[int(x) for x in row] for row in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InvalidInputError("matrix must be square")
    return rows


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col) if x) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v) if x) for row in a]


def trace(m):
    m = as_int_matrix(m)
    return sum(m[i][i] for i in range(len(m)))


def _row_norm_bound(m):
    # integer upper bound on the Euclidean norm of each row
    return [isqrt(sum(x * x for x in row)) + 1 for row in m]


def hadamard_bound(m):
    out = 1
    for r in _row_norm_bound(m):
        out *= r
    return out


# ---- determinant ---------------------------------------------------------

def det_bareiss(m):
    a = as_int_matrix(m)
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1] if n else 1


def det_modular(m):
    a = as_int_matrix(m)
    primes = mod.primes_for_bound(hadamard_bound(a))
    res = [[mod.det_mod(mod.reduce_matrix(a, p), p)] for p in primes]
    return mod.crt_lift(res, primes)[0]


def det(m):
    a = as_int_matrix(m)
    return det_bareiss(a) if len(a) <= SMALL else det_modular(a)


# ---- characteristic polynomial -------------------------------------------

def char_poly_berkowitz(m):
    """Division-free characteristic polynomial det(tI - M)."""
    a = as_int_matrix(m)
    n = len(a)
    if n == 0:
        return IntPoly([1])
    # v holds coefficients of the char poly of the leading r x r block,
    # highest degree first
    v = [1, -a[0][0]]
    for r in range(1, n):
        row = a[r][:r]  # R
        col = [a[i][r] for i in range(r)]  # C
        sub = [x[:r] for x in a[:r]]
        # Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^(r-1) C
        t = [1, -a[r][r]]
        w = col
        for _ in range(r):
            t.append(-sum(x * y for x, y in zip(row, w)))
            w = mat_vec(sub, w)
        new = []
        for i in range(r + 2):
            new.append(sum(t[i - j] * v[j] for j in range(min(i, r) + 1) if 0 <= i - j < len(t)))
        v = new
    return IntPoly(list(reversed(v)))


def char_poly_bound(a):
    # |c_k| <= e_k(row norms) <= prod(1 + row norm)
    out = 1
    for r in _row_norm_bound(a):
        out *= 1 + r
    return out


def char_poly_modular(m):
    a = as_int_matrix(m)
    primes = mod.primes_for_bound(char_poly_bound(a))
    res = [mod.charpoly_mod(mod.reduce_matrix(a, p), p) for p in primes]
    return IntPoly(mod.crt_lift(res, primes))


def char_poly(m):
    a = as_int_matrix(m)
    return char_poly_berkowitz(a) if len(a) <= SMALL else char_poly_modular(a)


# ---- inverse -------------------------------------------------------------

def inverse_exact(m):
    """Inverse over Q as a list of lists of Fractions (Gauss-Jordan)."""
    a = as_int_matrix(m)
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for j in range(n):
        piv = next((i for i in range(j, n) if aug[i][j]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[j], aug[piv] = aug[piv], aug[j]
        inv = 1 / aug[j][j]
        aug[j] = [x * inv for x in aug[j]]
        for i in range(n):
            if i != j and aug[i][j]:
                f = aug[i][j]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[j])]
    return [row[n:] for row in aug]


def _inverse_integral_modular(a):
    # integral inverse under det = +-1: entries are cofactors, bounded by Hadamard
    n = len(a)
    bound = 1
    norms = _row_norm_bound(a)
    for r in norms:
        bound *= r
    bound //= max(min(norms), 1)
    primes = mod.primes_for_bound(bound)
    res = []
    for p in primes:
        inv = mod.inverse_mod(mod.reduce_matrix(a, p), p)
        if inv is None:
            raise ConsistencyError("matrix is singular modulo a prime although det = +-1")
        res.append(inv.reshape(-1).tolist())
    flat = mod.crt_lift(res, primes)
    return [flat[i * n:(i + 1) * n] for i in range(n)]


def inverse_integral(m):
    """Exact inverse of an integer matrix whose inverse is integral.

    Raises ConsistencyError if the inverse is not integral, which for RSK
    matrices can only mean a bug upstream.
    """
    a = as_int_matrix(m)
    n = len(a)
    if n <= SMALL:
        inv = inverse_exact(a)
        if any(x.denominator != 1 for row in inv for x in row):
            raise ConsistencyError("inverse has non-integral entries")
        return [[int(x) for x in row] for row in inv]
    d = det(a)
    if abs(d) != 1:
        raise ConsistencyError(f"determinant {d} is not a unit; inverse is not integral")
    inv = _inverse_integral_modular(a)
    if not is_identity(mat_mul_fast(a, inv)):
        raise ConsistencyError("modular inverse failed verification")
    return inv


def mat_mul_fast(a, b):
    """Exact product through numpy object arrays."""
    return (np.array(a, dtype=object) @ np.array(b, dtype=object)).tolist()


def is_identity(m):
    return all(x == (i == j) for i, row in enumerate(m) for j, x in enumerate(row))


def is_zero_matrix(m):
    return all(x == 0 for row in m for x in row)


# ---- minimal polynomial --------------------------------------------------

def _vector_annihilator(a, v, cap):
    """Minimal monic annihilator over Q of ``v`` under ``a``, as IntPoly."""
    n = len(a)
    basis = []  # list of (pivot, reduced vector, combination coeffs)
    cur = [Fraction(x) for x in v]
    for k in range(cap + 1):
        vec = cur[:]
        comb = [Fraction(0)] * (k + 1)
        comb[k] = Fraction(1)
        for piv, bvec, bcomb in basis:
            f = vec[piv]
            if f:
                vec = [x - f * y for x, y in zip(vec, bvec)]
                for i, c in enumerate(bcomb):
                    comb[i] -= f * c
        nz = next((i for i in range(n) if vec[i]), None)
        if nz is None:
            # comb(M) v = 0 and comb is monic of degree k
            den = 1
            for c in comb:
                den = den * c.denominator // _gcd(den, c.denominator)
            return IntPoly([int(c * den) for c in comb]).primitive()
        inv = 1 / vec[nz]
        basis.append((nz, [x * inv for x in vec], [c * inv for c in comb]))
        cur = [sum(Fraction(x) * y for x, y in zip(row, cur) if x) for row in a]
    raise ConsistencyError("Krylov sequence did not terminate")


def _gcd(a, b):
    from math import gcd

    return gcd(a, b)


def _apply_poly(a, p, v):
    acc = [0] * len(v)
    for c in reversed(p.coeffs):
        acc = mat_vec(a, acc)
        acc = [x + c * y for x, y in zip(acc, v)]
    return acc


def min_poly(m, cp=None):
    """Minimal polynomial by exact Krylov sequences over the standard basis.

    Basis vectors already annihilated by the running lcm are skipped, and
    the loop stops once the lcm reaches the degree of the characteristic
    polynomial.
    """
    a = as_int_matrix(m)
    n = len(a)
    if n == 0:
        return IntPoly([1])
    cp = char_poly(a) if cp is None else cp
    mu = IntPoly([1])
    for i in range(n):
        if mu.degree == cp.degree:
            break
        e = [0] * n
        e[i] = 1
        if mu.degree > 0 and not any(_apply_poly(a, mu, e)):
            continue
        mu = poly_lcm(mu, _vector_annihilator(a, e, n))
    if mu.lc < 0:
        mu = -mu
    if not mu.is_monic():
        raise ConsistencyError(f"minimal polynomial {mu} is not monic")
    return mu


# ---- diagonalizability ---------------------------------------------------

def annihilates(p, m):
    """Whether p(M) = 0, decided exactly."""
    a = as_int_matrix(m)
    n = len(a)
    if n <= 2 * SMALL:
        return is_zero_matrix(p.eval_matrix(a))
    # entries of p(M) are bounded by sum |c_k| * R^k, R the max absolute row sum
    r = max(sum(abs(x) for x in row) for row in a)
    bound = sum(abs(c) * r ** k for k, c in enumerate(p.coeffs))
    for q in mod.primes_for_bound(bound):
        am = mod.reduce_matrix(a, q)
        acc = np.zeros((n, n), dtype=np.int64)
        for c in reversed(p.coeffs):
            acc = mod.matmul_mod(acc, am, q)
            acc[np.diag_indices(n)] = (acc[np.diag_indices(n)] + c) % q
        if acc.any():
            return False
    return True


def is_diagonalizable(m, cp=None):
    """Diagonalizability over C: the squarefree part of p_M annihilates M.

    This holds exactly when the minimal polynomial is squarefree.
    """
    a = as_int_matrix(m)
    if not a:
        return True
    cp = char_poly(a) if cp is None else cp
    return annihilates(squarefree_part(cp), a)
