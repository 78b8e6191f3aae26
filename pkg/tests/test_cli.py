import json

import pytest

from shearlab.cli import run
from shearlab.fatgraph import once_punctured_torus


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_graph_validate_builtin(capsys):
    code, out, _ = _run(capsys, "graph", "validate", "torus")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "ok"
    assert data["topology"] == {"V": 2, "E": 3, "F": 1, "genus": 1, "holes": 1}


def test_graph_info_tetrahedron(capsys):
    code, out, _ = _run(capsys, "graph", "info", "tetrahedron")
    assert code == 0
    data = json.loads(out)
    assert data["topology"] == {"V": 4, "E": 6, "F": 4, "genus": 0, "holes": 4}
    assert len(data["faces"]) == 4
    assert len(data["omega"]) == 6


def test_graph_from_file(tmp_path, capsys):
    g = once_punctured_torus((0.5, -1.0, 2.0))
    path = tmp_path / "g.json"
    path.write_text(json.dumps(g.to_json()))
    code, out, _ = _run(capsys, "graph", "validate", str(path))
    assert code == 0 and json.loads(out)["status"] == "ok"


def test_graph_missing_file_is_usage_error(capsys):
    code, _, err = _run(capsys, "graph", "validate", "/no/such/file.json")
    assert code == 2 and "error:" in err


def test_graph_malformed_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = _run(capsys, "graph", "validate", str(path))
    assert code == 2 and "error:" in err


def test_graph_invalid_structure(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"sigma": [1, 0, 3, 2], "z": [0, 0]}))
    code, _, err = _run(capsys, "graph", "validate", str(path))
    assert code == 2 and "error:" in err


def test_geodesic_eval(capsys):
    code, out, _ = _run(capsys, "geodesic", "eval", "torus", "--path", "0,5")
    assert code == 0
    data = json.loads(out)
    assert data["turns"] == ["R", "L"]
    assert data["value"] == pytest.approx(3.0)
    assert len(data["terms"]) == 3


def test_geodesic_invalid_path(capsys):
    code, _, err = _run(capsys, "geodesic", "eval", "torus", "--path", "0,2")
    assert code == 2 and "error:" in err


def test_flip_command(capsys):
    code, out, _ = _run(capsys, "flip", "torus", "--edge", "0")
    assert code == 0
    data = json.loads(out)
    assert data["record"]["edge"] == 0
    import math

    assert sorted(map(abs, data["after"]["z"][1:])) == pytest.approx([2 * math.log(2)] * 2)


def test_flip_bad_edge(capsys):
    code, _, err = _run(capsys, "flip", "torus", "--edge", "7")
    assert code == 2 and "error:" in err


@pytest.mark.parametrize("suite", ["goldman", "casimir", "qskein"])
def test_check_suites_pass(capsys, suite):
    code, out, _ = _run(capsys, "check", suite, "--cases", "5")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "pass"
    assert all(r["equal"] for r in data["reports"])


def test_check_skein_seeded(capsys):
    code, out, _ = _run(capsys, "check", "skein", "--cases", "3", "--seed", "42")
    assert code == 0
    data = json.loads(out)
    assert data["seed"] == 42 and data["status"] == "pass"


def test_check_relations_small(capsys):
    code, out, _ = _run(capsys, "check", "relations", "--cases", "3")
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_check_determinism(capsys):
    _, out1, _ = _run(capsys, "check", "skein", "--cases", "4", "--seed", "7")
    _, out2, _ = _run(capsys, "check", "skein", "--cases", "4", "--seed", "7")
    assert out1 == out2
    _, out3, _ = _run(capsys, "check", "skein", "--cases", "4", "--seed", "8")
    assert out1 != out3


def test_check_unknown_suite_usage_error(capsys):
    code, _, _ = _run(capsys, "check", "nonsense")
    assert code == 2


def test_qdilog_command(capsys):
    code, out, _ = _run(capsys, "qdilog", "--z", "1.0", "--hbar", "0.5")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "pass" and data["residual"] <= 1e-8


def test_qdilog_quasi_checks(capsys):
    for check in ("quasi1", "quasi2", "semiclassical"):
        hbar = "0.01" if check == "semiclassical" else "0.5"
        code, out, _ = _run(capsys, "qdilog", "--z", "0.5", "--hbar", hbar, "--check", check)
        assert code == 0 and json.loads(out)["status"] == "pass"


def test_missing_required_args(capsys):
    assert _run(capsys, "qdilog", "--z", "1.0")[0] == 2
    assert _run(capsys, "geodesic", "eval", "torus")[0] == 2
    assert _run(capsys, "frobnicate")[0] == 2


def test_stdout_is_json_only(capsys):
    for argv in (["graph", "info", "torus"], ["check", "goldman"], ["qdilog", "--z", "0", "--hbar", "1"]):
        code, out, _ = _run(capsys, *argv)
        assert code == 0
        json.loads(out)  # single JSON document
