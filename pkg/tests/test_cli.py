import io
import json
import subprocess
import sys

import pytest

from mincover.cli import run


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def records(text):
    return {r["name"]: r for r in json.loads(text)["records"]}


def test_prism_five_verify_json():
    code, out = invoke("prism", "5", "verify", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["verdict"] == "pass"
    rec = records(out)
    assert rec["group_order"]["computed"] == 6000
    assert rec["presented_order"]["computed"] == 6000
    assert rec["coincidence"]["verdict"] == "pass"
    assert all(r["anchor"] for r in doc["records"])


def test_antiprism_three_report_text():
    code, out = invoke("antiprism", "3", "report")
    assert code == 0
    assert "PASS  group_order: 48 (expected 48)" in out
    assert "PASS  genus: 0 (expected 0)" in out
    assert out.rstrip().endswith("overall: pass")


def test_json_is_deterministic():
    assert invoke("prism", "6", "verify", "--json")[1] == invoke("prism", "6", "verify", "--json")[1]


def test_text_and_json_share_records():
    _, text = invoke("prism", "8", "verify")
    _, js = invoke("prism", "8", "verify", "--json")
    names = [r["name"] for r in json.loads(js)["records"]]
    assert all(f" {name}: " in text for name in names)


def test_bad_map_names_edge(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"faces": [[0, 1, 2], [0, 1, 3], [0, 1, 4], [1, 2, 3]]}))
    code, out = invoke("map", str(bad), "report")
    assert code == 2 and out == ""
    assert "edge [0, 1]" in capsys.readouterr().err


def test_missing_map_file(tmp_path):
    assert invoke("map", str(tmp_path / "none.json"), "report")[0] == 2


def test_good_map(tmp_path):
    path = tmp_path / "tet.json"
    path.write_text(json.dumps({"faces": [[0, 1, 2], [0, 3, 1], [1, 3, 2], [2, 3, 0]]}))
    code, out = invoke("map", str(path), "verify", "--json")
    assert code == 0
    assert records(out)["group_order"]["computed"] == 24


@pytest.mark.parametrize("argv", [("prism", "2", "report"), ("prism", "x", "report"),
                                  ("platonic", "pyramid", "report"), ("platonic", "cube", "stabilizer", "--tree", "paper")])
def test_invalid_input(argv):
    assert invoke(*argv)[0] == 2


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        invoke("prism", "5", "frobnicate")
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        invoke("prism", "5", "report", "--coset-cap", "0")
    assert exc.value.code == 2


def test_cap_exit_code():
    code, out = invoke("prism", "5", "verify", "--coset-cap", "100", "--json")
    assert code == 3
    assert records(out)["presented_order"]["verdict"] == "cap"


def test_report_cap_for_orientability():
    assert invoke("prism", "7", "report", "--enum-cap", "10", "--coset-cap", "100")[0] == 3


@pytest.mark.parametrize("tree", ["bfs", "dfs", "stems", "paper"])
def test_stabilizer_verb(tree):
    code, out = invoke("antiprism", "4", "stabilizer", "--tree", tree, "--json")
    assert code == 0
    rec = json.loads(out)["records"]
    assert all(r["expected"] == 192 and r["verdict"] == "pass" for r in rec)
    if tree in ("stems", "paper"):
        assert "h_2" in records(out)["stabilizer_family"]["detail"]


@pytest.mark.parametrize("name", ["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"])
def test_platonic_verify(name):
    code, out = invoke("platonic", name, "verify", "--json")
    assert code == 0
    assert records(out)["regular"]["verdict"] == "pass"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mincover", "prism", "4", "report", "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert records(proc.stdout)["genus"]["computed"] == 0


def test_failing_record_exits_1(monkeypatch):
    from mincover import cli
    from mincover.report import check, info
    monkeypatch.setitem(cli.VERBS, "report", lambda fs, M, cfg: [info("x", "a value", 1), check("y", "a claim", 2, 3)])
    code, out = invoke("prism", "5", "report", "--json")
    assert code == 1
    assert json.loads(out)["verdict"] == "fail"
