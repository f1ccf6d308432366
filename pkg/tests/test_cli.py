import json

import pytest

from crystald.cli import main, parse_lambda
from crystald.kn_model import kn_to_json

from golden import KN5, XI5


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_lambda():
    assert parse_lambda("5/2,3/2,3/2,1/2,-1/2") == (5, 3, 3, 1, -1)
    assert parse_lambda("1,1,0,0") == (2, 2, 0, 0)
    with pytest.raises(Exception):
        parse_lambda("1/3")


def test_embed_lusztig_golden(tmp_path, capsys):
    path = tmp_path / "T.json"
    path.write_text(json.dumps(kn_to_json(KN5)))
    code, out, err = run(
        ["embed", "--n", "5", "--lambda", "5/2,3/2,3/2,1/2,-1/2", "--to", "lusztig", "--input", str(path)],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert tuple(data["c"]) == XI5
    assert data["shift2"] == [5, 3, 3, 1, -1]


def test_embed_spinor_and_separate(tmp_path, capsys):
    path = tmp_path / "T.json"
    path.write_text(json.dumps(kn_to_json(KN5)))
    code, out, _ = run(["embed", "--to", "spinor", "--input", str(path)], capsys)
    assert code == 0
    spinor = json.loads(out)
    assert [f["kind"] for f in spinor["factors"]] == ["A", "A", "sp-"]

    path2 = tmp_path / "S.json"
    path2.write_text(json.dumps(spinor))
    code, out, _ = run(["separate", "--input", str(path2)], capsys)
    assert code == 0
    sep = json.loads(out)
    assert sep["r"] == 5
    assert [c["entries"] for c in sep["tail"]["columns"]] == [[-2], [-4, -1], [-5, -3, -2, -1]]


def test_embed_spinor_idempotent(tmp_path, capsys):
    path = tmp_path / "T.json"
    path.write_text(json.dumps(kn_to_json(KN5)))
    _, out1, _ = run(["embed", "--to", "spinor", "--input", str(path)], capsys)
    path.write_text(out1)
    code, out2, _ = run(["embed", "--to", "spinor", "--input", str(path)], capsys)
    assert code == 0 and out1 == out2


def test_embed_verma(tmp_path, capsys):
    path = tmp_path / "T.json"
    path.write_text(json.dumps(kn_to_json(KN5)))
    code, out, _ = run(["embed", "--to", "verma", "--input", str(path)], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["r"] == 5 and data["body"]["n"] == 5


def test_verify_signatures_suite(capsys):
    code, out, _ = run(["verify", "--suite", "signatures", "--n", "4", "--seed", "3"], capsys)
    assert code == 0 and "[PASS]" in out


def test_validate_exit_codes(tmp_path, capsys):
    path = tmp_path / "T.json"
    path.write_text(json.dumps(kn_to_json(KN5)))
    code, out, _ = run(["validate", "--input", str(path)], capsys)
    assert code == 0 and json.loads(out)["valid"]

    bad = kn_to_json(KN5)
    bad["columns"][1]["entries"] = [5, 4, -1]
    path.write_text(json.dumps(bad))
    code, out, _ = run(["validate", "--input", str(path)], capsys)
    assert code == 1 and not json.loads(out)["valid"]


def test_unreadable_input_is_usage_error(tmp_path, capsys):
    code, _, err = run(["validate", "--input", str(tmp_path / "missing.json")], capsys)
    assert code == 2 and "cannot read" in err


def test_enumerate_count(capsys):
    code, out, _ = run(["enumerate", "--n", "4", "--lambda", "1,0,0,0"], capsys)
    assert code == 0
    assert json.loads(out)["count"] == 8


def test_enumerate_deterministic(capsys):
    code, out1, _ = run(["enumerate", "--n", "4", "--lambda", "1,1,0,0", "--model", "spinor"], capsys)
    code, out2, _ = run(["enumerate", "--n", "4", "--lambda", "1,1,0,0", "--model", "spinor"], capsys)
    assert out1 == out2


def test_graph_dot(capsys):
    code, out, _ = run(["graph", "--n", "4", "--lambda", "1,0,0,0", "--format", "dot"], capsys)
    assert code == 0
    assert out.startswith("digraph crystal {") and out.count("->") == 8


def test_roots(capsys):
    code, out, _ = run(["roots", "--n", "5"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 20
    assert data["betas"][0] == {"index": 1, "sign": "+", "i": 4, "j": 5}


def test_verify_dimension(capsys):
    code, out, _ = run(["verify", "--suite", "dimension", "--n", "4"], capsys)
    assert code == 0
    assert out.count("[PASS]") == 11


def test_missing_n_is_usage_error(capsys):
    code, _, err = run(["roots"], capsys)
    assert code == 2


def test_budget_exceeded(capsys):
    code, _, err = run(
        ["enumerate", "--n", "4", "--lambda", "2,1,0,0", "--budget", "10"], capsys
    )
    assert code == 1 and "too-large" in err
