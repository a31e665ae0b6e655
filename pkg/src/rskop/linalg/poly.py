"""Dense univariate polynomials over the integers.

Coefficients are stored in ascending order of degree with no trailing
zeros; the zero polynomial has an empty coefficient tuple.
"""

from fractions import Fraction
from math import gcd, isqrt

from ..exceptions import InvalidInputError


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    # construction -------------------------------------------------------
    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots):
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @classmethod
    def from_factors(cls, factors):
        """Product of ``(poly_or_coeffs, exponent)`` pairs."""
        p = cls([1])
        for f, e in factors:
            f = f if isinstance(f, IntPoly) else cls(f)
            p = p * f ** e
        return p

    # basic protocol -----------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.lc == 1

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var="t"):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # arithmetic ---------------------------------------------------------
    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = IntPoly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod_exact(self, other):
        """Quotient and remainder over Q, returned when both are integral.

        Raises ValueError if the division leaves a non-integral quotient.
        """
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        q = [0] * max(len(r) - other.degree, 0)
        lc = other.lc
        for k in range(len(r) - 1, other.degree - 1, -1):
            c = r[k]
            if not c:
                continue
            if c % lc:
                raise ValueError("quotient is not integral")
            f = c // lc
            q[k - other.degree] = f
            for i, y in enumerate(other.coeffs):
                r[k - other.degree + i] -= f * y
        return IntPoly(q), IntPoly(r)

    def __floordiv__(self, other):
        q, r = self.divmod_exact(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def __mod__(self, other):
        return self.divmod_exact(other)[1]

    def divides(self, other):
        """True if self divides ``other`` in Q[t]."""
        if self.is_zero():
            return other.is_zero()
        return pseudo_rem(other, self).is_zero()

    def derivative(self):
        return IntPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def content(self):
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self):
        """Primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly([c // g for c in self.coeffs])

    def eval_matrix(self, m):
        """p(M) for a square list-of-lists integer matrix, by Horner."""
        from .matrix import as_int_matrix, mat_mul

        m = as_int_matrix(m)
        n = len(m)
        acc = [[0] * n for _ in range(n)]
        for c in reversed(self.coeffs):
            acc = mat_mul(acc, m)
            for i in range(n):
                acc[i][i] += c
        return acc


def _coerce(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly([x])
    return IntPoly(x)


def pseudo_rem(a, b):
    """Remainder of |lc(b)|^k * a by b with k = deg a - deg b + 1.

    Using the absolute value keeps the sign of the true remainder, which
    Sturm sequences depend on.
    """
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero")
    r = list(a.coeffs)
    db = b.degree
    lc = b.lc
    alc = abs(lc)
    sgn = 1 if lc > 0 else -1
    while len(r) - 1 >= db and r:
        k = len(r) - 1
        c = r[k]
        # r <- |lc| * r - sgn * c * t^(k-db) * b  kills the top term
        r = [alc * x for x in r]
        for i, y in enumerate(b.coeffs):
            r[k - db + i] -= sgn * c * y
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return IntPoly(r)


def poly_gcd(a, b):
    """Primitive gcd over Q[t], normalized to positive leading coefficient."""
    a, b = a.primitive(), b.primitive()
    while not b.is_zero():
        a, b = b, pseudo_rem(a, b).primitive()
    return a.primitive()


def poly_lcm(a, b):
    if a.is_zero() or b.is_zero():
        return IntPoly()
    g = poly_gcd(a, b)
    q = exact_quotient(a * b, g)
    return q.primitive()


def exact_quotient(a, b):
    """a / b when b divides a in Q[t] and the quotient is taken primitive-scaled.

    For a monic a and primitive b the quotient is integral by Gauss's lemma.
    """
    try:
        return a // b
    except ValueError:
        pass
    # fall back to rational division, then clear denominators
    r = [Fraction(c) for c in a.coeffs]
    q = [Fraction(0)] * (len(r) - b.degree)
    for k in range(len(r) - 1, b.degree - 1, -1):
        f = r[k] / b.lc
        q[k - b.degree] = f
        for i, y in enumerate(b.coeffs):
            r[k - b.degree + i] -= f * y
    if any(r):
        raise ValueError("division is not exact")
    den = 1
    for f in q:
        den = den * f.denominator // gcd(den, f.denominator)
    return IntPoly([int(f * den) for f in q])


def squarefree_part(p):
    """p / gcd(p, p'), primitive with positive leading coefficient."""
    if p.is_zero():
        raise InvalidInputError("zero polynomial has no squarefree part")
    if p.degree <= 0:
        return IntPoly([1])
    g = poly_gcd(p, p.derivative())
    return exact_quotient(p.primitive(), g).primitive()


def is_squarefree(p):
    return poly_gcd(p, p.derivative()).degree == 0


def sturm_chain(p):
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        r = -pseudo_rem(chain[-2], chain[-1])
        if r.is_zero():
            break
        g = r.content()
        chain.append(IntPoly([c // g for c in r.coeffs]))
    return [f for f in chain if not f.is_zero()]


def _sign_changes(signs):
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_real_root_count(p):
    """Number of distinct real roots of ``p``."""
    p = _coerce(p)
    if p.is_zero():
        raise InvalidInputError("the zero polynomial has infinitely many roots")
    s = squarefree_part(p)
    if s.degree <= 0:
        return 0
    chain = sturm_chain(s)
    at_pos = [1 if f.lc > 0 else -1 for f in chain]
    at_neg = [(1 if f.lc > 0 else -1) * (-1) ** f.degree for f in chain]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


# ---- GF(2) ---------------------------------------------------------------

def _gf2_mod(a, m):
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def _gf2_mulmod(a, b, m):
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a.bit_length() == m.bit_length():
            a ^= m
    return _gf2_mod(out, m)


def _gf2_gcd(a, b):
    while b:
        a, b = b, _gf2_mod(a, b)
    return a


def to_gf2(p):
    """Bitmask of the mod-2 reduction; bit k is the coefficient of t^k."""
    return sum(1 << k for k, c in enumerate(p.coeffs) if c % 2)


def irreducible_mod2(p):
    """Whether the reduction of ``p`` mod 2 is irreducible over GF(2).

    Uses gcd(f, t^(2^k) - t) = 1 for every k up to deg(f) / 2.
    """
    p = _coerce(p)
    f = to_gf2(p)
    if f == 0:
        raise InvalidInputError("polynomial vanishes mod 2")
    deg = f.bit_length() - 1
    if deg < p.degree:
        raise InvalidInputError("leading coefficient is even; the reduction drops degree")
    if deg <= 0:
        return False
    if deg == 1:
        return True
    x = 0b10
    power = x  # t^(2^k) mod f
    for _ in range(deg // 2):
        power = _gf2_mulmod(power, power, f)
        if _gf2_gcd(f, power ^ x) != 1:
            return False
    return True


# ---- rational roots ------------------------------------------------------

def _divisors(n):
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(p):
    """Rational roots of a monic integer polynomial.

    They are integers dividing the lowest nonzero coefficient; 0 is
    included when p(0) = 0.
    """
    p = _coerce(p)
    if not p.is_monic():
        raise InvalidInputError("rational_roots expects a monic polynomial")
    roots = set()
    coeffs = p.coeffs
    k = 0
    while k < len(coeffs) and coeffs[k] == 0:
        k += 1
    if k:
        roots.add(0)
    low = coeffs[k] if k < len(coeffs) else 0
    if low:
        for d in _divisors(low):
            for r in (d, -d):
                if p(r) == 0:
                    roots.add(r)
    return roots


def strip_pm1_factors(p):
    """Return (a, b, rest) with p = (t - 1)^a (t + 1)^b rest."""
    p = _coerce(p)
    if p.is_zero():
        raise InvalidInputError("cannot strip factors from the zero polynomial")
    a = b = 0
    while p.degree > 0 and p(1) == 0:
        p = p // IntPoly([-1, 1])
        a += 1
    while p.degree > 0 and p(-1) == 0:
        p = p // IntPoly([1, 1])
        b += 1
    return a, b, p


def squarefree_decomposition(p):
    """Yun's algorithm: [(f_1, 1), (f_2, 2), ...] with p = c * prod f_i^i.

    Factors are primitive with positive leading coefficient; trivial
    factors are dropped.
    """
    p = _coerce(p)
    if p.is_zero():
        raise InvalidInputError("zero polynomial has no squarefree decomposition")
    out = []
    if p.degree <= 0:
        return out
    p = p.primitive()
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = exact_quotient(p, a).primitive()
    c = exact_quotient(dp, a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        c = exact_quotient(b, a).primitive()
        d = exact_quotient(d, a) - c.derivative() if not d.is_zero() else d
        b = c
        i += 1
    return out
