import io
import json
import subprocess
import sys

import pytest

from rskop.cli import main

from golden import DET_TABLE, MATRICES, RUNNING_EXAMPLE, RUNNING_P, RUNNING_Q


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    env = json.loads(out)
    assert env["command"] == argv[0]
    assert env["format"] == "json"
    return env["result"]


def _literal(rows):
    return ";".join(",".join(map(str, r)) for r in rows)


def test_apply_running_example(capsys):
    res = run_json(capsys, "apply", _literal(RUNNING_EXAMPLE))
    assert tuple(map(tuple, res["P"])) == RUNNING_P
    assert tuple(map(tuple, res["Q"])) == RUNNING_Q
    code, out, _ = run(capsys, "apply", _literal(RUNNING_EXAMPLE))
    assert code == 0
    assert "P: 1 1 1 1 1 3 3 / 2 2 2 / 3 3" in out


def test_apply_single_box(capsys):
    res = run_json(capsys, "apply", "1")
    assert res["P"] == [[1]] and res["Q"] == [[1]]


@pytest.mark.parametrize("rows", [RUNNING_EXAMPLE, ((2, 0), (1, 1)), ((0, 0, 1), (3, 0, 0))])
def test_apply_inverse_roundtrip(capsys, rows):
    res = run_json(capsys, "apply", _literal(rows))
    p = _literal(res["P"])
    q = _literal(res["Q"])
    back = run_json(capsys, "apply", "--inverse", p, q,
                    "--rows", str(len(rows)), "--cols", str(len(rows[0])))
    assert back["matrix"]["entries"] == [str(x) for r in rows for x in r]


def test_apply_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("0,3,2\n1,2,0\n2,0,2\n"))
    res = run_json(capsys, "apply", "-")
    assert tuple(map(tuple, res["P"])) == RUNNING_P


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "apply", "1,x")
    assert code == 2
    assert "position 2" in err
    code, out, err = run(capsys, "apply", "1,x", "--format", "json")
    assert code == 2
    assert json.loads(err)["error"]["exit_code"] == 2


def test_invalid_weight_exit_code(capsys):
    code, _, _ = run(capsys, "matrix", "21", "11")
    assert code == 2


def test_capacity_exit_code(capsys):
    code, _, err = run(capsys, "matrix", "333", "333", "--max-basis", "10")
    assert code == 3
    assert err


def test_matrix_111(capsys):
    res = run_json(capsys, "matrix", "111", "111", "--charpoly", "--minpoly")
    expected = MATRICES[((1, 1, 1), (1, 1, 1))]
    assert res["matrix"]["entries"] == [str(x) for r in expected for x in r]
    # t^6 + 3t^5 + t^4 - 2t^3 - t^2 - t - 1 and t^5 + 2t^4 - t^3 - t^2 - 1
    assert res["charpoly"]["coeffs"] == ["-1", "-1", "-1", "-2", "1", "3", "1"]
    assert res["minpoly"]["coeffs"] == ["-1", "0", "-1", "-1", "2", "1"]


def test_matrix_charpoly_21_111(capsys):
    res = run_json(capsys, "matrix", "21", "111", "--charpoly")
    assert res["charpoly"]["coeffs"] == ["-1", "0", "0", "1"]


def test_matrix_inverse_11(capsys):
    res = run_json(capsys, "matrix", "11", "11", "--inverse")
    assert res["matrix"]["entries"] == ["1", "1", "0", "-1"]


def test_text_and_json_agree(capsys):
    res = run_json(capsys, "matrix", "111", "111", "--det", "--trace")
    _, out, _ = run(capsys, "matrix", "111", "111", "--det", "--trace")
    assert f"det: {res['det']}" in out
    assert f"trace: {res['trace']}" in out
    res = run_json(capsys, "trace", "2", "2", "4")
    _, out, _ = run(capsys, "trace", "2", "2", "4")
    assert res["trace"] in out.split()


def test_classify(capsys):
    _, out, _ = run(capsys, "classify", "2", "3", "6")
    assert "diagonalizable, E9" in out
    res = run_json(capsys, "classify", "2", "3", "7")
    assert res["diagonalizable"] is False


def test_reduce(capsys):
    _, out, _ = run(capsys, "reduce", "61", "232")
    assert "(21,111) with divisor z11 z12^2 z13" in out


def test_blocks_and_det(capsys):
    res = run_json(capsys, "blocks", "2", "2", "3")
    assert res["total_dim"] == "20"
    res = run_json(capsys, "det", "3", "3", "3", "--direct")
    assert res["det"] == "-1"
    _, out, _ = run(capsys, "det", "3", "3", "3", "--format", "csv")
    assert out.splitlines() == ["m,n,d,det", "3,3,3,-1"]


def test_trace_perm_and_cd(capsys):
    assert run_json(capsys, "trace-perm", "5")["trace"] == "23"
    assert run_json(capsys, "cd", "6")["count"] == "406"


def test_tables_det(capsys):
    _, out, _ = run(capsys, "tables", "--which", "det")
    lines = out.splitlines()
    for m, row in DET_TABLE.items():
        assert lines[m].split()[1:] == [str(x) for x in row]


def test_tables_stable(capsys):
    first = run(capsys, "tables", "--which", "reduced-d3")[1]
    second = run(capsys, "tables", "--which", "reduced-d3")[1]
    assert first == second and first


def test_verify(capsys):
    res = run_json(capsys, "verify", "--suite", "rsk")
    assert res["checks"] and all(c["ok"] for c in res["checks"])
    code, _, _ = run(capsys, "verify", "--suite", "nonsense")
    assert code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rskop.cli", "classify", "2", "2", "9"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "diagonalizable" in proc.stdout
