"""Input validation helpers shared by the public functions and estimators."""

from numbers import Integral

from .exceptions import InvalidPairError, InvalidTableauError, InvalidWeightError


def _as_int(x, what, error=InvalidWeightError):
    if isinstance(x, bool) or not isinstance(x, Integral):
        # numpy integer scalars register as Integral
        raise error(f"{what} must be an integer, got {x!r}")
    return int(x)


def check_weight(w, name="weight"):
    """Return ``w`` as a tuple of nonnegative ints."""
    try:
        out = tuple(_as_int(x, name) for x in w)
    except TypeError:
        raise InvalidWeightError(f"{name} must be a sequence of integers, got {w!r}") from None
    if any(x < 0 for x in out):
        raise InvalidWeightError(f"{name} has a negative entry: {out}")
    return out


def check_weight_pair(sigma, pi):
    sigma = check_weight(sigma, "sigma")
    pi = check_weight(pi, "pi")
    if sum(sigma) != sum(pi):
        raise InvalidWeightError(
            f"|sigma| = {sum(sigma)} differs from |pi| = {sum(pi)}"
        )
    return sigma, pi


def check_table(alpha, error=InvalidWeightError):
    """Return ``alpha`` as a rectangular tuple-of-tuples of nonnegative ints.

    Accepts nested sequences and 2-d numpy arrays.
    """
    rows = tuple(tuple(_as_int(x, "table entry", error) for x in row) for row in alpha)
    if rows:
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise error(f"ragged table: row lengths {[len(r) for r in rows]}")
        if n == 0:
            rows = ()
    if any(x < 0 for r in rows for x in r):
        raise error("table has a negative entry")
    return rows


def check_tableau(t):
    """Return ``t`` as a tuple of row tuples, verifying semistandardness."""
    rows = tuple(tuple(_as_int(x, "tableau label", InvalidTableauError) for x in r) for r in t)
    rows = tuple(r for r in rows if r)
    for i, r in enumerate(rows):
        if any(x < 1 for x in r):
            raise InvalidTableauError(f"row {i + 1} has a label < 1: {r}")
        if any(a > b for a, b in zip(r, r[1:])):
            raise InvalidTableauError(f"row {i + 1} is not weakly increasing: {r}")
        if i and len(r) > len(rows[i - 1]):
            raise InvalidTableauError("row lengths are not weakly decreasing")
        if i and any(r[j] <= rows[i - 1][j] for j in range(len(r))):
            raise InvalidTableauError(f"column strictness fails in row {i + 1}")
    return rows


def check_tableau_pair(p, q):
    try:
        p = check_tableau(p)
        q = check_tableau(q)
    except InvalidTableauError as e:
        raise InvalidPairError(str(e)) from None
    if tuple(map(len, p)) != tuple(map(len, q)):
        raise InvalidPairError(
            f"shapes differ: {tuple(map(len, p))} vs {tuple(map(len, q))}"
        )
    return p, q
