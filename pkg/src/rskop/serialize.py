"""Literal parsing and JSON/CSV/text rendering used by the CLI.

JSON conventions: a matrix is {"rows", "cols", "entries"} with row-major
decimal strings, a polynomial is {"coeffs"} with ascending decimal
strings.  Strings keep big integers lossless in any JSON reader.
"""

import csv
import io
import json
import re

from .exceptions import InvalidInputError
from .linalg import IntPoly


class ParseError(InvalidInputError):
    def __init__(self, text, pos, msg):
        self.text = text
        self.pos = pos
        caret = " " * pos + "^"
        super().__init__(f"{msg} at position {pos}\n  {text}\n  {caret}")


_INT = re.compile(r"-?\d+")


def _parse_int_list(text, offset, seps, full):
    """Integers separated by whitespace, or by commas when ',' is in seps."""
    sep = r"(\s*,\s*|\s+)" if "," in seps else r"(\s+)"
    lead = len(text) - len(text.lstrip())
    body = text.strip()
    out = []
    if not body:
        return out
    pos = offset + lead
    for i, piece in enumerate(re.split(sep, body)):
        if i % 2:
            pos += len(piece)
            continue
        if not _INT.fullmatch(piece):
            bad = next((j for j, ch in enumerate(piece) if not (ch.isdigit() or ch == "-")), 0)
            what = repr(piece) if piece else "nothing"
            raise ParseError(full, pos + bad, f"expected an integer, got {what}")
        out.append(int(piece))
        pos += len(piece)
    return out


def parse_weight(text):
    """Weight vector from "2,1,1" or the compact "211"."""
    s = text.strip()
    if not s:
        raise ParseError(text, 0, "empty weight")
    if "," in s or " " in s:
        vals = _parse_int_list(s, 0, ", ", s)
    elif s.isdigit():
        vals = [int(ch) for ch in s]
    else:
        bad = next(i for i, ch in enumerate(s) if not ch.isdigit())
        raise ParseError(s, bad, "weight must be digits or comma-separated integers")
    for v in vals:
        if v < 0:
            raise InvalidInputError(f"negative weight entry in {text!r}")
    return tuple(vals)


def parse_matrix(text):
    """Nonnegative matrix from "0,3,2;1,2,0;2,0,2" (rows split by ';' or newlines)."""
    full = text.strip()
    rows = []
    offset = 0
    for chunk in re.split(r"([;\n])", full):
        if chunk in (";", "\n"):
            offset += 1
            continue
        if chunk.strip():
            rows.append(_parse_int_list(chunk, offset, ", \t", full))
        offset += len(chunk)
    if not rows:
        raise ParseError(full, 0, "empty matrix")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise InvalidInputError(f"ragged matrix literal: row lengths {[len(r) for r in rows]}")
    if any(x < 0 for r in rows for x in r):
        raise InvalidInputError("matrix entries must be nonnegative")
    return tuple(tuple(r) for r in rows)


def parse_tableau(text):
    """Tableau rows separated by ';' with comma-separated labels."""
    full = text.strip()
    if full in ("", "-", "()"):
        return ()
    rows = []
    offset = 0
    for chunk in re.split(r"([;/])", full):
        if chunk in (";", "/"):
            offset += 1
            continue
        if chunk.strip():
            rows.append(tuple(_parse_int_list(chunk, offset, ", ", full)))
        offset += len(chunk)
    return tuple(rows)


# ---- JSON ----------------------------------------------------------------

def matrix_to_json(entries):
    entries = [list(r) for r in entries]
    rows = len(entries)
    cols = len(entries[0]) if rows else 0
    return {"rows": rows, "cols": cols, "entries": [str(x) for r in entries for x in r]}


def matrix_from_json(obj):
    rows, cols = obj["rows"], obj["cols"]
    flat = [int(x) for x in obj["entries"]]
    if len(flat) != rows * cols:
        raise InvalidInputError("entry count does not match rows * cols")
    return [flat[i * cols:(i + 1) * cols] for i in range(rows)]


def poly_to_json(p):
    return {"coeffs": [str(c) for c in p.coeffs]}


def poly_from_json(obj):
    return IntPoly(int(c) for c in obj["coeffs"])


def table_to_json(t):
    return [list(r) for r in t]


def tableau_to_json(t):
    return [list(r) for r in t]


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=False)


# ---- text / csv ----------------------------------------------------------

def format_matrix(entries):
    entries = [list(r) for r in entries]
    if not entries:
        return "[]"
    width = max(len(str(x)) for r in entries for x in r)
    return "\n".join("[" + " ".join(str(x).rjust(width) for x in r) + "]" for r in entries)


def format_table(t):
    return "[" + "; ".join(",".join(map(str, r)) for r in t) + "]"


def format_tableau(t):
    return " / ".join(" ".join(map(str, r)) for r in t) if t else "(empty)"


def to_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for r in rows:
        writer.writerow(r)
    return buf.getvalue()
