import json

import pytest
from hypothesis import given, settings, strategies as st

from hopfcyc.cli import RunConfig, main, run
from hopfcyc.linalg import Matrix
from hopfcyc.serialize import (SchemaError, algebra_from_json, algebra_to_json, dumps, hopf_from_json,
                               hopf_to_json, loads, matrix_from_json, matrix_to_json)
from hopfcyc.zoo import diagonal, group_algebra, symmetric_group_3


def _hopf_doc(H):
    return dict(hopf_to_json(H), kind="hopf", name=H.name)


def test_run_trivial_table(capsys):
    assert main(["run", "--example", "zoo:trivial", "--suite", "all"]) == 0
    out = capsys.readouterr().out
    assert "HC" in out and "1,0,1,0" in out and "overall: PASS" in out


def test_run_json_and_out(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["run", "--example", "zoo:z2", "--suite", "complexes", "--format", "json",
                 "--out", str(out), "--max-degree", "3"]) == 0
    rep = json.loads(out.read_text())
    assert rep["ok"] and rep["max_degree"] == 3
    obj = rep["examples"][0]["suites"]["complexes"]["objects"][0]
    assert obj["homology"]["HC"] == {"0": 2, "1": 0, "2": 2}


def test_determinism_excluding_timing():
    cfg = RunConfig(examples=["zoo:K2", "zoo:coring-z2"], max_degree=3)
    a, _ = run(cfg)
    b, _ = run(cfg)
    a.pop("timing"), b.pop("timing")
    assert dumps(a) == dumps(b)


def test_env_max_degree(monkeypatch, tmp_path):
    monkeypatch.setenv("HOPFCYC_MAX_DEGREE", "2")
    out = tmp_path / "r.json"
    assert main(["run", "--example", "zoo:trivial", "--suite", "complexes", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["max_degree"] == 2
    monkeypatch.setenv("HOPFCYC_MAX_DEGREE", "two")
    assert main(["run", "--example", "zoo:trivial"]) == 2


def test_bad_inputs(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"kind": ')
    assert main(["run", str(p)]) == 2
    assert "line 1" in capsys.readouterr().err
    assert main(["run", "--example", "zoo:missing"]) == 2
    assert main(["run"]) == 2
    assert main(["run", "--example", "zoo:trivial", "--max-degree", "0"]) == 2
    p.write_text('{"kind": "monoid"}')
    assert main(["run", str(p)]) == 2


def test_hopf_input_file(tmp_path, capsys):
    p = tmp_path / "s3.json"
    p.write_text(dumps(_hopf_doc(symmetric_group_3())))
    assert main(["run", str(p), "--suite", "sayd", "--max-degree", "2"]) == 0


def test_failing_check_exits_1(tmp_path, capsys):
    doc = _hopf_doc(group_algebra(3))
    doc["antipode"] = matrix_to_json(Matrix.identity(3))  # parses, fails the antipode axiom
    p = tmp_path / "z3.json"
    p.write_text(dumps(doc))
    out = tmp_path / "r.json"
    assert main(["run", str(p), "--out", str(out)]) == 1
    assert "input rejected: axioms: antipode" in capsys.readouterr().out
    rep = json.loads(out.read_text())
    assert not rep["ok"] and rep["examples"][0]["input"]["violations"][0]["check"] == "antipode"


def test_algebra_input(tmp_path):
    doc = {"kind": "algebra", "algebra": algebra_to_json(diagonal(2)), "units": [[1, 1], ["2", "-1/3"]]}
    p = tmp_path / "r2.json"
    p.write_text(json.dumps(doc))
    assert main(["run", str(p), "--suite", "galois", "--max-degree", "2"]) == 0
    doc["units"] = [[0, 1]]  # not a unit: verification failure, not a parse error
    p.write_text(json.dumps(doc))
    assert main(["run", str(p)]) == 1
    doc["units"] = [[0]]  # wrong length: schema error
    p.write_text(json.dumps(doc))
    assert main(["run", str(p)]) == 2


def test_describe_and_list(capsys):
    assert main(["describe", "zoo:crossed-z2"]) == 0
    assert "Galois datum" in capsys.readouterr().out
    assert main(["describe", "zoo:nope"]) == 2
    assert main(["list"]) == 0
    assert "zoo:closing" in capsys.readouterr().out


def test_schema_error_paths():
    with pytest.raises(SchemaError) as exc:
        loads("[1, 2,")
    assert exc.value.where[0] == 1
    with pytest.raises(SchemaError):
        algebra_from_json({"dim": 1, "mult": [[["1"]]]})
    with pytest.raises(SchemaError):
        hopf_from_json({"algebra": algebra_to_json(diagonal(1))})


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7),
                         min_size=2, max_size=2), min_size=1, max_size=3))
def test_matrix_json_round_trip(rows):
    m = Matrix.from_rows(rows)
    assert matrix_from_json(json.loads(dumps(matrix_to_json(m)))) == m


def test_hopf_json_round_trip():
    for H in (group_algebra(3), symmetric_group_3()):
        H2 = hopf_from_json(json.loads(dumps(hopf_to_json(H))))
        assert H2.algebra.table == H.algebra.table
        assert H2.comult == H.comult and H2.antipode == H.antipode
