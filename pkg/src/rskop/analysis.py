"""Determinant, trace, diagonalizability and scanners for RSK_{m,n,d}.

Everything here goes through the block decomposition: invariants are
computed once per reduced pair and combined with the block multiplicities.
The ``*_direct`` variants build every weight space of the full operator
instead and exist for cross-checking.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import factorial
from typing import NamedTuple

from .contingency import count_tables
from .exceptions import CapacityError, ConsistencyError, InvalidInputError, VerificationError
from .linalg import (
    IntPoly,
    char_poly,
    det,
    inverse_integral,
    is_diagonalizable,
    squarefree_part,
    strip_pm1_factors,
    sturm_real_root_count,
    trace,
)
from .operators import build_matrix, is_triangular
from .weights import (
    WeightPair,
    block_multiplicities,
    block_multiplicity,
    enumerate_reduced_pairs,
    growth_potential,
    n_zero,
)

DEFAULT_PERM_LIMIT = 11


# ---- per-block invariants --------------------------------------------------

@lru_cache(maxsize=None)
def _matrix(pair):
    return build_matrix(pair)


@lru_cache(maxsize=None)
def block_det(pair):
    return det(_matrix(pair).entries)


@lru_cache(maxsize=None)
def block_trace(pair, inverse=False):
    m = _matrix(pair)
    if inverse:
        return trace(inverse_integral(m.entries))
    return trace(m.entries)


@lru_cache(maxsize=None)
def block_char_poly(pair):
    return char_poly(_matrix(pair).entries)


@lru_cache(maxsize=None)
def block_is_diagonalizable(pair):
    return is_diagonalizable(_matrix(pair).entries, block_char_poly(pair))


# ---- determinant -----------------------------------------------------------

def binom_parity(n, k):
    """C(n, k) mod 2 by Lucas: odd exactly when the bits of k lie inside n."""
    if k < 0 or k > n:
        return 0
    return int(k & ~n == 0)


def multiplicity_parity(pair, m, n, d):
    """N_{sigma,pi}(m, n, d) mod 2 without forming the binomials."""
    s, p = pair
    d0 = sum(s)
    if len(s) == 2 and len(p) == 2:
        a = int(d == d0)
    else:
        g = growth_potential(s, p)
        a = int(d == d0) if g == 0 else binom_parity(d - d0 + g - 1, g - 1)
    first = binom_parity(m, len(s)) & binom_parity(n, len(p))
    if s == p:
        return a & first
    second = binom_parity(m, len(p)) & binom_parity(n, len(s))
    return a & (first ^ second)


def det_rsk(m, n, d):
    """det RSK_{m,n,d} as the product of block determinants with odd multiplicity."""
    _check_mnd(m, n, d)
    out = 1
    for pair in enumerate_reduced_pairs(d, min(m, n), max(m, n)):
        if multiplicity_parity(pair, m, n, d):
            out *= block_det(pair)
    return out


def _all_weight_pairs(m, n, d):
    def comps(length):
        if length == 0:
            return [()] if d == 0 else []
        return [c for c in product(range(d + 1), repeat=length) if sum(c) == d]

    for s in comps(m):
        for p in comps(n):
            yield s, p


def det_rsk_direct(m, n, d):
    """Determinant of the full operator, one weight space at a time."""
    out = 1
    for s, p in _all_weight_pairs(m, n, d):
        out *= det(build_matrix(s, p).entries)
    return out


def det_period(d):
    """2^r with r minimal such that 2^r > d."""
    r = 0
    while 2 ** r <= d:
        r += 1
    return 2 ** r


def verify_det_period(d, m_range, n_range):
    """Check det RSK_{m,n,d} is unchanged by adding 2^r to m or to n."""
    per = det_period(d)
    for m in m_range:
        for n in n_range:
            v = det_rsk(m, n, d)
            if v != det_rsk(m + per, n, d) or v != det_rsk(m, n + per, d):
                return False
    return True


def minimal_det_period(d, m_range, n_fixed_range=None):
    """Smallest observed period in m of det RSK_{m,n,d} over the given ranges."""
    n_fixed_range = n_fixed_range or m_range
    ms = list(m_range)
    per = det_period(d)
    for q in range(1, per + 1):
        if per % q:
            continue
        if all(det_rsk(m, n, d) == det_rsk(m + q, n, d) for m in ms for n in n_fixed_range):
            return q
    return per


# ---- trace -----------------------------------------------------------------

def trace_rsk(m, n, d, inverse=False):
    """Trace of RSK_{m,n,d} (or of its inverse) from block traces."""
    n0, blocks = block_multiplicities(m, n, d)
    return n0 + sum(b.multiplicity * block_trace(b.pair, inverse) for b in blocks)


def trace_rsk_direct(m, n, d, inverse=False):
    out = 0
    for s, p in _all_weight_pairs(m, n, d):
        mat = build_matrix(s, p).entries
        out += trace(inverse_integral(mat) if inverse else mat)
    return out


def trace_22_recurrence(d):
    """Trace of RSK_{2,2,d} from s_d = 4d + s_{d-4}."""
    if d < 0:
        return 0
    if d == 0:
        return 1
    return 4 * d + (trace_22_recurrence(d - 4) if d >= 4 else 0)


def trace_22_closed(d):
    return 4 * d + sum(4 * (d - 4 * b) + (d == 4 * b) for b in range(1, d // 4 + 1))


# ---- permutation sweep -----------------------------------------------------

def _perm_limit():
    return int(os.environ.get("RSKOP_PERM_LIMIT", DEFAULT_PERM_LIMIT))


def default_workers():
    return max(1, int(os.environ.get("RSKOP_WORKERS", "1")))


def _chunks(total, pieces):
    pieces = max(1, min(pieces, total))
    step, extra = divmod(total, pieces)
    start = 0
    for i in range(pieces):
        size = step + (i < extra)
        yield start, size
        start += size


def _run_chunk(args):
    from ._sweep import sweep_range

    d, start, count = args
    t, z = sweep_range(d, start, count)
    return int(t), int(z)


def permutation_sweep(d, workers=None, chunks=None, limit=None):
    """(trace, zero count) of the diagonal of RSK_{1^d,1^d}.

    The d! permutations are split into contiguous rank ranges; sums are
    combined in rank order, so the result does not depend on ``workers``.
    """
    limit = _perm_limit() if limit is None else limit
    if d < 0:
        raise InvalidInputError("d must be nonnegative")
    if d > limit:
        raise CapacityError("permutation sweep degree", d, limit)
    if d == 0:
        return 1, 0
    workers = default_workers() if workers is None else max(1, workers)
    total = factorial(d)
    chunks = chunks or max(workers * 4, 1)
    jobs = [(d, s, c) for s, c in _chunks(total, chunks)]
    if workers == 1:
        results = [_run_chunk(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_chunk, jobs))
    return sum(t for t, _ in results), sum(z for _, z in results)


def trace_perm(d, workers=None, chunks=None, limit=None):
    """Trace of RSK_{1^d,1^d} via the sweep."""
    return permutation_sweep(d, workers, chunks, limit)[0]


def count_Cd(d, workers=None, chunks=None, limit=None):
    """Number of permutation tables whose diagonal entry in RSK_{1^d,1^d} is zero."""
    return permutation_sweep(d, workers, chunks, limit)[1]


def permutation_sweep_reference(d):
    """Slow pure-Python version of the sweep, used as a test oracle."""
    from itertools import permutations

    from .operators import permutation_entry

    t = z = 0
    for u in permutations(range(d)):
        a = [[0] * d for _ in range(d)]
        for j, i in enumerate(u):
            a[i][j] = 1
        e = permutation_entry(a, a)
        t += e
        z += e == 0
    return t, z


# ---- diagonalizability -----------------------------------------------------

class ClassificationResult(NamedTuple):
    m: int
    n: int
    d: int
    diagonalizable: bool
    dynkin_label: str
    rule_fired: str
    blocker: object = None


def dynkin_label(m, n, d):
    """Type of the graph of three paths with m, n, d nodes sharing one node."""
    a, b, c = sorted((m, n, d))
    if a <= 1:
        return f"A{max(m + n + d - 2, 0)}"
    if a == 2 and b == 2:
        return f"D{c + 2}"
    if (a, b) == (2, 3) and c in (3, 4, 5):
        return f"E{c + 3}"
    if (a, b, c) == (2, 3, 6):
        return "E9"
    return "none"


def classify_diagonalizable(m, n, d, cross_check=False):
    """Diagonalizability of RSK_{m,n,d} from the case analysis on (m, n, d)."""
    _check_mnd(m, n, d)
    lo, hi = sorted((m, n))
    blocker = None
    if lo <= 1:
        ok, rule = True, "min(m,n) <= 1: operator is the identity"
    elif d <= 3:
        ok, rule = True, "d <= 3: only the blocks 11/11, 21/111, 12/111, 111/111"
    elif lo == 2 and hi == 2:
        ok, rule = True, "m = n = 2: triangular blocks only"
    elif lo == 2 and hi == 3:
        ok = d <= 6
        rule = "m = 2, n = 3: diagonalizable iff d <= 6"
        blocker = None if ok else WeightPair((4, 3), (2, 2, 3))
    elif hi > 3:
        ok, rule = False, "n > 3 and d > 3"
        blocker = WeightPair((2, 2), (1, 1, 1, 1)) if d == 4 else WeightPair((3, 2), (2, 1, 1, 1))
    else:
        ok, rule = False, "m > 2 and d > 3"
        blocker = WeightPair((2, 1, 1), (2, 1, 1))
    label = dynkin_label(m, n, d)
    res = ClassificationResult(m, n, d, ok, label, rule, blocker)
    if cross_check:
        direct, bad = diagonalizable_by_blocks(m, n, d)
        if direct != ok:
            raise VerificationError(f"case analysis says {ok} but block test says {direct} (block {bad})")
    return res


def diagonalizable_by_blocks(m, n, d):
    """Test every block, smallest first; returns (verdict, first failing pair)."""
    _, blocks = block_multiplicities(m, n, d)
    pairs = sorted((b.pair for b in blocks), key=lambda p: (count_tables(*p), p))
    for p in pairs:
        if not block_is_diagonalizable(p):
            return False, p
    return True, None


# ---- conjecture scanners -----------------------------------------------------

@dataclass
class ConjectureReport:
    conjecture: str
    scanned: str
    checked: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def all_pass(self):
        return not self.counterexamples

    def to_dict(self):
        return {
            "conjecture": self.conjecture,
            "scanned": self.scanned,
            "checked": self.checked,
            "counterexamples": [str(c) for c in self.counterexamples],
            "all_pass": self.all_pass,
        }


def has_nonreal_root(p):
    s = squarefree_part(p)
    return sturm_real_root_count(s) < s.degree


def _pairs_with_lengths(d_max, len_sigma, len_pi, d_min=1):
    return [p for p in enumerate_reduced_pairs(d_max, len_sigma, len_pi, d_min)
            if len(p.sigma) == len_sigma and len(p.pi) == len_pi]


def scan_conjecture_complex(degree_bound, len_sigma=3, len_pi=3):
    """Look for reduced pairs of the given lengths whose eigenvalues are all real."""
    if min(len_sigma, len_pi) < 3:
        raise InvalidInputError("the non-real eigenvalue scan needs both lengths >= 3")
    rep = ConjectureReport("non-real eigenvalue",
                           f"reduced pairs, len(sigma)={len_sigma}, len(pi)={len_pi}, degree <= {degree_bound}")
    for pair in _pairs_with_lengths(degree_bound, len_sigma, len_pi):
        rep.checked += 1
        if not has_nonreal_root(block_char_poly(pair)):
            rep.counterexamples.append(pair)
    return rep


def scan_conjecture_nonintegral(degree_bound, len_sigma=2, len_pi=3):
    """Look for non-triangular reduced pairs whose eigenvalues are all +-1.

    Rational eigenvalues of these matrices can only be +-1, so a
    nonconstant cofactor after removing (t-1) and (t+1) means an
    irrational, hence non-integer, eigenvalue.
    """
    rep = ConjectureReport("non-integer eigenvalue",
                           f"reduced pairs, len(sigma)={len_sigma}, len(pi)={len_pi}, degree <= {degree_bound}")
    for pair in _pairs_with_lengths(degree_bound, len_sigma, len_pi):
        rep.checked += 1
        _, _, rest = strip_pm1_factors(block_char_poly(pair))
        if is_triangular(*pair):
            if rest.degree > 0:
                raise ConsistencyError(f"triangular pair {pair} has eigenvalues other than +-1")
            continue
        if rest.degree <= 0:
            rep.counterexamples.append(pair)
    return rep


def cd_ratio_report(d_max, workers=None):
    """|C_d| / d! for d = 1..d_max (no verdict; trend data only)."""
    out = []
    for d in range(1, d_max + 1):
        c = count_Cd(d, workers=workers)
        out.append((d, c, c / factorial(d)))
    return out


def roots_of_unity_presence(k, m, n, d):
    """Check that t^k - 1 divides the char poly of a block of RSK_{m,n,d}.

    The block is RSK_{(k-1)1, 1^k}, whose matrix is A_k.
    """
    if m < 2 or n < k or d < k or k < 2:
        raise InvalidInputError("needs k >= 2, m >= 2 and n, d >= k")
    pair = WeightPair((k - 1, 1), (1,) * k)
    mult = block_multiplicity(pair.sigma, pair.pi, m, n, d)
    if mult == 0:
        return False
    target = IntPoly.monomial(k) - 1
    return target.divides(block_char_poly(pair))


def _check_mnd(m, n, d):
    if min(m, n, d) < 0:
        raise InvalidInputError("m, n, d must be nonnegative")


__all__ = [
    "ClassificationResult",
    "ConjectureReport",
    "binom_parity",
    "block_char_poly",
    "block_det",
    "block_is_diagonalizable",
    "block_trace",
    "cd_ratio_report",
    "classify_diagonalizable",
    "count_Cd",
    "det_period",
    "det_rsk",
    "det_rsk_direct",
    "diagonalizable_by_blocks",
    "dynkin_label",
    "minimal_det_period",
    "multiplicity_parity",
    "n_zero",
    "permutation_sweep",
    "permutation_sweep_reference",
    "roots_of_unity_presence",
    "scan_conjecture_complex",
    "scan_conjecture_nonintegral",
    "trace_22_closed",
    "trace_22_recurrence",
    "trace_perm",
    "trace_rsk",
    "trace_rsk_direct",
    "verify_det_period",
]
