import io
import json
import math
from pathlib import Path

import pytest

from bicomplex import Bicomplex, TMatrix, bicomplex_eig, dot, TVector
from bicomplex.cli import main
from bicomplex.serialize import dumps, parse_bicomplex, parse_tmatrix

GOLDEN = Path(__file__).parent / "golden"

CASES = [
    ("eig", "eig_j"),
    ("selfadjoint", "selfadjoint_i2"),
    ("norm", "norm_zero"),
    ("info", "info_null"),
    ("info", "info_one"),
    ("info", "info_1234"),
]


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


@pytest.mark.parametrize("command,name", CASES)
def test_golden(capsys, command, name):
    code, out = run(capsys, command, str(GOLDEN / f"{name}.json"))
    assert code == 0
    assert out == (GOLDEN / f"{name}.out").read_text()


def test_documented_values(capsys):
    _, out = run(capsys, "eig", str(GOLDEN / "eig_j.json"))
    (pair,) = json.loads(out)["report"]["pairs"]
    assert pair["lambda"] == [0, 0, 0, 1] and pair["residual"] <= 1e-12
    assert pair["lambda_hyperbolic"] is True
    _, out = run(capsys, "info", str(GOLDEN / "info_null.json"))
    doc = json.loads(out)
    assert doc["null_cone"] is True and "inverse" not in doc
    _, out = run(capsys, "info", str(GOLDEN / "info_one.json"))
    doc = json.loads(out)
    assert all(v == [1, 0, 0, 0] for v in doc["conjugates"].values())
    assert doc["inverse"] == [1, 0, 0, 0]
    _, out = run(capsys, "info", str(GOLDEN / "info_1234.json"))
    doc = json.loads(out)
    assert doc["mod3"] == math.sqrt(30) and doc["conjugates"]["1"] == [1, -2, 3, -4]


def test_stdin_and_commands(capsys, monkeypatch):
    pair = '{"x": [[1, 0, 1, 0]], "y": [[1, 0, 1, 0]]}'
    code, out = run(capsys, "dot", "-", stdin=pair, monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["dot"] == [2, 0, 0, 0]
    doc = '{"x": [[1, 0, 0, 0]], "y": [[1, 0, 0, 0]], "metric": {"g1": [[2, 0]], "g2": [[3, 0]]}}'
    code, out = run(capsys, "dot", "-", stdin=doc, monkeypatch=monkeypatch)
    res = json.loads(out)
    assert code == 0 and res["dot"] == [2.5, 0, 0, -0.5] and res["closed"] is False
    code, out = run(capsys, "norm", "-", stdin='{"x": [[1,0,0,0]], "y": [[0,0,0,0]]}',
                    monkeypatch=monkeypatch)
    assert json.loads(out)["distance"] == 1
    code, out = run(capsys, "angle", "-", stdin='{"x": [[1,0],[0,0]], "y": [[0,0],[1,0]]}',
                    monkeypatch=monkeypatch)
    assert json.loads(out)["angle"] == pytest.approx([math.pi / 2, 0])
    m = '{"n": 2, "entries": [[0,0,0,0],[0,0,1,0],[0,0,0,0],[0,0,0,0]]}'
    code, out = run(capsys, "adjoint", "-", stdin=m, monkeypatch=monkeypatch)
    assert json.loads(out)["adjoint"]["entries"][2] == [0, 0, -1, 0]
    m = '{"n": 2, "entries": [[1,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,1]]}'
    code, out = run(capsys, "selfadjoint", "-", stdin=m, monkeypatch=monkeypatch)
    res = json.loads(out)
    assert code == 0 and res["self_adjoint"] is True and res["all_hyperbolic"] is True
    code, out = run(capsys, "eig", "--pairing", "full", "-", stdin=m, monkeypatch=monkeypatch)
    assert len(json.loads(out)["report"]["pairs"]) == 4
    code, out = run(capsys, "verify", "--samples", "50")
    res = json.loads(out)
    assert code == 0 and res["passed"] is True


@pytest.mark.parametrize("argv,stdin,code,err", [
    (["info", "--require-inverse", "-"], "[0, 1, 1, 0]", 1, "null_cone"),
    (["selfadjoint", "--strict", "-"], '{"n": 1, "entries": [[0,0,1,0]]}', 1, "not_self_adjoint"),
    (["eig", "--pairing", "full", "-"],
     json.dumps({"n": 9, "entries": [[1, 0, 0, 0]] * 81}), 1, "pairing_overflow"),
    (["angle", "-"], '{"x": [[0.5, 0.5]], "y": [[1, 0]]}', 1, "zero_channel"),
    (["info", "-"], "[1, 2, 3]", 2, "input_error"),
    (["info", "-"], "not json", 2, "input_error"),
    (["eig", "-"], '{"n": 2, "entries": [[1,0,0,0]]}', 2, "input_error"),
    (["dot", "-"], '{"x": [[1,0,0,0]], "y": [[1,0,0,0],[1,0,0,0]]}', 2, "dimension_mismatch"),
    (["dot", "-"], '{"x": [[1,0,0,0]], "y": [[1,0,0,0]], "metric": {"g1": [[-1,0]], "g2": [[1,0]]}}',
     2, "invalid_metric"),
    (["info", "--tol", "nan", "-"], "[1, 0, 0, 0]", 2, "input_error"),
])
def test_exit_codes(capsys, monkeypatch, argv, stdin, code, err):
    got, out = run(capsys, *argv, stdin=stdin, monkeypatch=monkeypatch)
    assert got == code
    doc = json.loads(out)
    assert doc["status"] == "error" and doc["error"]["code"] == err and doc["error"]["message"]


def test_convergence_failure_exit(capsys, monkeypatch):
    import bicomplex._backend as backend
    monkeypatch.setattr(backend, "durand_kerner", lambda c, m, t: ([0j] * (len(c) - 1), m, False))
    code, out = run(capsys, "eig", str(GOLDEN / "eig_j.json"))
    assert code == 1 and json.loads(out)["error"]["code"] == "convergence_failure"


def test_missing_file_and_usage(capsys, tmp_path):
    code, out = run(capsys, "info", str(tmp_path / "nope.json"))
    assert code == 2 and json.loads(out)["status"] == "error"
    assert main([]) == 2
    assert main(["bogus"]) == 2


def test_text_format(capsys):
    code, out = run(capsys, "info", "--format", "text", str(GOLDEN / "info_one.json"))
    assert code == 0
    assert "status: \"ok\"" in out and "conjugates:" in out and "  1: [1.0, 0.0, 0.0, 0.0]" in out


def test_bch_tol_env(capsys, monkeypatch):
    near = "[1, 0, 0, 0.999999]"
    monkeypatch.setattr("sys.stdin", io.StringIO(near))
    main(["info", "-"])
    assert json.loads(capsys.readouterr().out)["null_cone"] is False
    monkeypatch.setenv("BCH_TOL", "1e-3")
    monkeypatch.setattr("sys.stdin", io.StringIO(near))
    main(["info", "-"])
    assert json.loads(capsys.readouterr().out)["null_cone"] is True
    monkeypatch.setenv("BCH_TOL", "abc")
    monkeypatch.setattr("sys.stdin", io.StringIO(near))
    assert main(["info", "-"]) == 2
    capsys.readouterr()


def test_roundtrip_bit_exact():
    import numpy as np
    rng = np.random.default_rng(3)
    a = TMatrix(rng.normal(size=(3, 3, 4)))
    assert parse_tmatrix(json.loads(dumps(a))) == a
    rep = bicomplex_eig(a)
    back = json.loads(dumps(rep))
    for p, q in zip(rep.pairs, back["pairs"]):
        assert parse_bicomplex(q["lambda"]) == p.lam
        assert [tuple(e) for e in q["vector"]] == [tuple(e) for e in p.vector.tolist()]
        assert q["residual"] == p.residual
    for w in (Bicomplex(0.1, 1 / 3, -2e-300, 1e300), dot(TVector(rng.normal(size=(4, 4))),
                                                        TVector(rng.normal(size=(4, 4))))):
        assert parse_bicomplex(json.loads(dumps(w))) == w
