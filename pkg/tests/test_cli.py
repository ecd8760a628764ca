import io as _io
import json
import os

import pytest

from nacx.cli import main

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def run(*argv):
    out, err = _io.StringIO(), _io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def spec(name):
    return os.path.join(DATA, name)


@pytest.mark.parametrize("argv", [
    ("field", "check", "--spec", spec("field_f4.json")),
    ("alg", "build", "--spec", spec("f4_alpha.json")),
    ("alg", "division", "--spec", spec("f9_d.json")),
    ("alg", "nuclei", "--spec", spec("f4_alpha.json")),
    ("aut", "list", "--spec", spec("f4_alpha.json")),
    ("aut", "cyclic-extension", "--spec", spec("f9_d.json")),
    ("tower", "build", "--spec", spec("tower_f25.json")),
    ("recognize", "--table", spec("table_f4_alpha.json")),
])
def test_exit_zero_and_deterministic(argv):
    code, out, _ = run(*argv)
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == "nacx-report/1"
    assert run(*argv)[1] == out


def test_field_check_reducible():
    code, out, _ = run("field", "check", "--spec", spec("field_bad.json"))
    assert code == 0 and json.loads(out)["field"] is False


def test_reports():
    rep = json.loads(run("aut", "list", "--spec", spec("f4_alpha.json"))[1])
    assert rep["aut_count"] == 3 and rep["inner-automorphism-hypotheses"]["holds"]
    rep = json.loads(run("aut", "cyclic-extension", "--spec", spec("f9_d.json"))[1])
    assert rep["verdict"] is True and rep["generator"]["k"] == "-1" and rep["generator"]["order"] == 2
    rep = json.loads(run("aut", "cyclic-extension", "--spec", spec("f4_alpha.json"), "--degree", "2")[1])
    assert rep["verdict"] is False
    rep = json.loads(run("alg", "nuclei", "--spec", spec("f4_alpha.json"))[1])
    assert rep["nuc-l=nuc-m=D"] is True
    rep = json.loads(run("tower", "build", "--spec", spec("tower_f25.json"))[1])
    assert rep["H_order"] == 4 and rep["H^q=H_{id,k^q}"] is True


def test_recognition_rejection_exit_one():
    code, out, err = run("recognize", "--table", spec("bad.json"))
    assert code == 1
    assert err.startswith("error: condition (4) failed")
    assert json.loads(out)["rejected"] is True


def test_malformed_input(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{")
    code, _, err = run("alg", "build", "--spec", str(p))
    assert code == 1 and "line 1" in err
    p.write_text(json.dumps({"type": "petit", "field": {"p": 2, "modulus": [1, 1, 1]}}))
    code, _, err = run("alg", "build", "--spec", str(p))
    assert code == 1 and "spec.f: missing" in err
    assert run("alg", "build", "--spec", str(tmp_path / "nope.json"))[0] == 1
    assert run("nosuch")[0] == 1


def test_unknown_exit_two(monkeypatch):
    monkeypatch.setenv("NACX_MAX_ENUM", "2")
    monkeypatch.setenv("NACX_MAX_SCAN", "10")
    code, out, _ = run("alg", "division", "--spec", spec("f9_d.json"))
    assert code == 2 and json.loads(out)["division"] is None


def test_out_file(tmp_path):
    target = tmp_path / "reports" / "r.json"
    code, out, _ = run("--out", str(target), "aut", "list", "--spec", spec("f8_d.json"))
    assert code == 0
    assert out.strip() == "7 automorphisms found"
    assert json.loads(target.read_text())["aut_count"] == 7
