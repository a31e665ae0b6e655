"""Weight pairs, growth potential matrices and reduction.

Multiplying every monomial of a weight space by a variable z_kl is
compatible with RSK exactly when sigma_k + pi_l >= d.  Running this
backwards gives the reduction of a weight pair, and counting the ways to
run it forwards gives the block multiplicities of the full operator.
"""

from math import comb
from typing import NamedTuple

from ._validation import check_weight_pair
from .exceptions import ConsistencyError, InvalidInputError


class WeightPair(NamedTuple):
    sigma: tuple
    pi: tuple

    @property
    def degree(self):
        return sum(self.sigma)

    def __str__(self):
        return f"({weight_str(self.sigma)}, {weight_str(self.pi)})"


class ReductionRecord(NamedTuple):
    original: WeightPair
    reduced: WeightPair
    divisor_exponents: tuple  # rows indexed like original.sigma, cols like original.pi


class BlockMultiplicity(NamedTuple):
    pair: WeightPair
    multiplicity: int


def weight_str(w):
    """Compact shorthand: digits run together when every part is < 10."""
    if all(x < 10 for x in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))


def as_pair(sigma, pi=None):
    if pi is None:
        sigma, pi = sigma
    return WeightPair(*check_weight_pair(sigma, pi))


def strip_zeros(w):
    return tuple(x for x in w if x)


def normalize(sigma, pi=None):
    """Drop zero entries and transpose if needed.

    Returns ``(pair, transposed)`` where ``pair`` has len(sigma) <= len(pi)
    and, for equal lengths, sigma lexicographically at least pi.
    """
    pair = as_pair(sigma, pi)
    s, p = strip_zeros(pair.sigma), strip_zeros(pair.pi)
    flip = len(s) > len(p) or (len(s) == len(p) and s < p)
    if flip:
        s, p = p, s
    return WeightPair(s, p), flip


def is_normalized(sigma, pi):
    if 0 in sigma or 0 in pi:
        return False
    return len(sigma) < len(pi) or (len(sigma) == len(pi) and sigma >= pi)


def growth_matrix(sigma, pi=None):
    """g(i, j) = sigma_i + pi_j - d as a tuple of rows."""
    s, p = as_pair(sigma, pi)
    d = sum(s)
    return tuple(tuple(a + b - d for b in p) for a in s)


def growth_potential(sigma, pi=None):
    """Number of zero entries of the growth matrix."""
    return sum(x == 0 for row in growth_matrix(sigma, pi) for x in row)


def is_reduced(sigma, pi=None):
    s, p = as_pair(sigma, pi)
    s, p = strip_zeros(s), strip_zeros(p)
    if not s:
        return True
    return max(s) + max(p) <= sum(s)


def reduce(sigma, pi=None):
    """Reduce a weight pair by dividing out every forced variable at once.

    Zero entries of the reduced pair are dropped; the divisor matrix keeps
    the indexing of the input.
    """
    pair = as_pair(sigma, pi)
    g = growth_matrix(pair)
    div = tuple(tuple(max(x, 0) for x in row) for row in g)
    s = tuple(a - sum(row) for a, row in zip(pair.sigma, div))
    p = tuple(b - sum(col) for b, col in zip(pair.pi, zip(*div))) if div else pair.pi
    reduced = WeightPair(strip_zeros(s), strip_zeros(p))
    if sum(reduced.sigma) != sum(reduced.pi) or not is_reduced(reduced):
        raise ConsistencyError(f"reduction of {pair} produced {reduced}")
    return ReductionRecord(pair, reduced, div)


def reduced_form(sigma, pi=None):
    """Normalized reduced pair that labels the block of (sigma, pi)."""
    return normalize(reduce(sigma, pi).reduced)[0]


def poset_covers(sigma, pi=None):
    """Pairs (sigma + e_k, pi + e_l) covering (sigma, pi)."""
    s, p = as_pair(sigma, pi)
    d = sum(s)
    out = []
    for k in range(len(s)):
        for l in range(len(p)):
            if s[k] + p[l] >= d:
                out.append(WeightPair(_bump(s, k, 1), _bump(p, l, 1)))
    return out


def poset_lower_covers(sigma, pi=None):
    """Pairs covered by (sigma, pi): divisions by z_kl with g(k, l) > 0."""
    s, p = as_pair(sigma, pi)
    g = growth_matrix(s, p)
    out = []
    for k in range(len(s)):
        for l in range(len(p)):
            if g[k][l] > 0:
                out.append(WeightPair(_bump(s, k, -1), _bump(p, l, -1)))
    return out


def downward_closure(sigma, pi=None):
    """Every pair reachable from (sigma, pi) by legal divisions, including itself."""
    start = as_pair(sigma, pi)
    seen = {start}
    stack = [start]
    while stack:
        for q in poset_lower_covers(stack.pop()):
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def _bump(w, k, delta):
    return w[:k] + (w[k] + delta,) + w[k + 1:]


def count_A(sigma, pi, d):
    """Number of normalized degree-d pairs reducing to the reduced pair (sigma, pi)."""
    s, p = as_pair(sigma, pi)
    if not is_normalized(s, p) or not is_reduced(s, p) or not s:
        raise InvalidInputError(f"{WeightPair(s, p)} is not a nonzero normalized reduced pair")
    d0 = sum(s)
    if d < d0:
        return 0
    if len(s) == 2 and len(p) == 2:
        return 4 * (d - d0) + (d == d0)
    if len(p) < 3:
        raise InvalidInputError(f"no count for lengths {len(s)}, {len(p)}")
    g = growth_potential(s, p)
    if g == 0:
        return int(d == d0)
    return comb(d - d0 + g - 1, g - 1)


def block_multiplicity(sigma, pi, m, n, d):
    s, p = as_pair(sigma, pi)
    a = count_A(s, p, d)
    if s == p:
        return a * comb(m, len(s)) * comb(n, len(p))
    return a * (comb(m, len(s)) * comb(n, len(p)) + comb(m, len(p)) * comb(n, len(s)))


def n_zero(m, n, d):
    """Multiplicity of the 1x1 identity block in the degree-d operator."""
    if d == 0:
        return 1 if m and n else 0
    return comb(d + n - 1, d) * m + comb(d + m - 1, d) * n - m * n


def _compositions(d, max_len, max_part):
    # compositions of d into at most max_len positive parts, each <= max_part
    def rec(left, k):
        if left == 0:
            yield ()
            return
        if k == 0:
            return
        for x in range(min(left, max_part), 0, -1):
            for tail in rec(left - x, k - 1):
                yield (x,) + tail

    return rec(d, max_len)


def enumerate_reduced_pairs(d_max, max_len_sigma, max_len_pi, d_min=1):
    """Nonzero normalized reduced pairs with degree in [d_min, d_max]."""
    out = []
    for d in range(max(d_min, 1), d_max + 1):
        for s in _compositions(d, max_len_sigma, d):
            top = d - max(s)
            if top < 1:
                continue
            for p in _compositions(d, max_len_pi, top):
                if len(s) > len(p) or (len(s) == len(p) and s < p):
                    continue
                out.append(WeightPair(s, p))
    return out


def block_multiplicities(m, n, d):
    """(N_0, blocks) for the degree-d operator on m x n matrices."""
    if min(m, n, d) < 0:
        raise InvalidInputError("m, n, d must be nonnegative")
    lo, hi = min(m, n), max(m, n)
    blocks = []
    for pair in enumerate_reduced_pairs(d, lo, hi):
        mult = block_multiplicity(pair.sigma, pair.pi, m, n, d)
        if mult:
            blocks.append(BlockMultiplicity(pair, mult))
    return n_zero(m, n, d), blocks
