import json

import pytest

from rskop.exceptions import InvalidInputError
from rskop.linalg import IntPoly
from rskop.serialize import (
    ParseError,
    format_matrix,
    matrix_from_json,
    matrix_to_json,
    parse_matrix,
    parse_tableau,
    parse_weight,
    poly_from_json,
    poly_to_json,
    to_csv,
)


@pytest.mark.parametrize("text, expected", [
    ("232", (2, 3, 2)),
    ("2,3,2", (2, 3, 2)),
    (" 2, 3 ,2 ", (2, 3, 2)),
    ("12,1", (12, 1)),
    ("1", (1,)),
])
def test_parse_weight(text, expected):
    assert parse_weight(text) == expected


@pytest.mark.parametrize("text", ["", "2a1", "2,,1", "2;1", "-1,2"])
def test_parse_weight_rejects(text):
    with pytest.raises(InvalidInputError):
        parse_weight(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_matrix("0,3,2;1,q,0")
    assert info.value.pos == 8
    assert "^" in str(info.value)


def test_parse_matrix():
    assert parse_matrix("0,3,2;1,2,0;2,0,2") == ((0, 3, 2), (1, 2, 0), (2, 0, 2))
    assert parse_matrix("0 3\n1 2\n") == ((0, 3), (1, 2))
    assert parse_matrix("1") == ((1,),)


@pytest.mark.parametrize("text", ["", "1,2;3", "1,-2", "1.5"])
def test_parse_matrix_rejects(text):
    with pytest.raises(InvalidInputError):
        parse_matrix(text)


def test_parse_tableau():
    assert parse_tableau("1,1,3;2") == ((1, 1, 3), (2,))
    assert parse_tableau("1 1 3 / 2") == ((1, 1, 3), (2,))
    assert parse_tableau("") == ()


def test_matrix_json_roundtrip():
    big = 3 ** 60
    rows = [[1, -big], [0, 7]]
    obj = json.loads(json.dumps(matrix_to_json(rows)))
    assert obj["rows"] == 2 and obj["cols"] == 2
    assert all(isinstance(x, str) for x in obj["entries"])
    assert matrix_from_json(obj) == rows


def test_matrix_json_bad_count():
    with pytest.raises(InvalidInputError):
        matrix_from_json({"rows": 2, "cols": 2, "entries": ["1", "2", "3"]})


def test_poly_json_roundtrip():
    p = IntPoly([-1, 0, 0, 2 ** 70])
    obj = json.loads(json.dumps(poly_to_json(p)))
    assert obj["coeffs"][0] == "-1"
    assert poly_from_json(obj) == p


def test_text_and_csv():
    assert format_matrix([[1, -10], [0, 2]]) == "[  1 -10]\n[  0   2]"
    assert to_csv([["a", 1], ["b", -2]]) == "a,1\nb,-2\n"
