import sympy as sp
import pytest

T = sp.symbols("t")


def expand_coeffs(text):
    """Ascending integer coefficients of a factored polynomial in t."""
    poly = sp.Poly(sp.expand(sp.sympify(text)), T)
    return [int(c) for c in reversed(poly.all_coeffs())]


def sympy_charpoly(rows):
    m = sp.Matrix(rows)
    return [int(c) for c in reversed(m.charpoly(T).all_coeffs())]


@pytest.fixture
def t():
    return T
