import io
import json
import subprocess
import sys

import pytest

from spectral_extrema import families, graph6
from spectral_extrema.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    text = out.getvalue().strip()
    try:
        return code, json.loads(text)
    except json.JSONDecodeError:
        return code, text


@pytest.fixture(autouse=True)
def single_worker(monkeypatch):
    monkeypatch.setenv("SPECTRAL_EXTREMA_WORKERS", "1")


def test_gen():
    code, text = call("gen", "fan", "8", "--g6")
    assert code == 0 and text == graph6.encode(families.fan(8).graph)
    code, data = call("gen", "cycle", "4", "--json")
    assert data == {"n": 4, "edges": [[0, 1], [0, 3], [1, 2], [2, 3]]}


def test_lambda_report():
    code, data = call("lambda", "--g6", "Bw")
    assert code == 0
    assert data["results"]["lambda1"] == 2.0
    assert data["inputs"] == ["Bw"] and data["command"] == "lambda"
    assert {"schema", "version", "seed"} <= set(data)


def test_lambda_batch_and_full(tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text("Bw\nBg\n")
    code, data = call("lambda", "--file", str(path), "--full")
    assert code == 0 and len(data["results"]) == 2
    assert data["results"][1]["spectrum"][0] == pytest.approx(2 ** 0.5)


def test_edge_list_json_input(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(families.cycle(5).to_json())
    code, data = call("lambda", "--file", str(path))
    assert code == 0 and data["results"]["lambda1"] == 2.0


def test_free_and_core_and_eta():
    g = graph6.encode(families.extremal(3, 4).graph)
    code, data = call("free", "--g6", g, "--pattern", "fan:8")
    assert code == 0 and data["results"]["contains"] is False
    code, data = call("free", "--g6", g, "--pattern", "fan:6")
    assert data["results"]["contains"] is True and len(data["results"]["witness"]) == 6
    code, data = call("core", "--g6", graph6.encode(families.cycle(5)), "--k", "2")
    assert data["results"]["core"] == [0, 1, 2, 3, 4]
    code, data = call("eta", "--g6", g, "--k", "3", "--set", "")
    assert data["results"]["eta"] == 0


def test_decompose_and_trace():
    g = graph6.encode(families.extremal(3, 4).graph)
    code, data = call("decompose", "--g6", g, "--k", "3")
    assert code == 0
    assert data["results"]["components"][0]["class"] == "J2"
    assert data["results"]["slack"]["identity_residual"] <= 1e-6
    code, data = call("trace-ineq", "--g6", graph6.encode(families.cycle(7)), "--k", "2")
    assert code == 0 and data["results"]["holds"] is True


def test_verify_nosal():
    code, data = call("verify", "--bound", "nosal", "--m", "8")
    assert code == 0 and data["results"]["bound"]["violated"] is False


def test_verify_violation_exit_code():
    code, data = call("verify", "--bound", "fan:3", "--m", "10", "--nmax", "7")
    assert code == 2 and data["results"]["bound"]["violated"] is True


def test_search_report():
    code, data = call("search", "--m", "6", "--pattern", "clique:3", "--json")
    assert code == 0
    res = data["results"]
    assert res["best_lambda"] == pytest.approx(6 ** 0.5)
    assert res["config"]["pattern"] == "clique:3"


def test_hill_climb_mode():
    code, data = call("search", "--m", "6", "--mode", "hill_climb", "--seed", "2")
    assert code == 0 and data["seed"] == 2 and data["results"]["local_maximum"] in (True, False)


@pytest.mark.parametrize("argv", [
    ["nonsense"],
    ["lambda"],
    ["lambda", "--g6", "!!"],
    ["free", "--g6", "Bw", "--pattern", "wheel:5"],
    ["search", "--m", "20"],
    ["verify", "--bound", "fan", "--m", "5"],
    ["gen", "cycle", "2"],
])
def test_usage_errors_exit_1(argv):
    code, data = call(*argv)
    assert code == 1 and "error" in data


def test_capability_error_exit_3():
    # with k = 13 the 12-core of N(u*) in K_26 has 25 < 2k+1 vertices, so the
    # exact circumference is needed beyond its 24-vertex cap
    code, data = call("decompose", "--g6", graph6.encode(families.complete(26)), "--k", "13")
    assert code == 3 and data["error"] == "capability"


def test_output_is_byte_stable():
    a = io.StringIO()
    b = io.StringIO()
    run(["lambda", "--g6", "Bw"], stdout=a)
    run(["lambda", "--g6", "Bw"], stdout=b)
    assert a.getvalue() == b.getvalue()


def test_twelve_significant_digits():
    code, data = call("lambda", "--g6", graph6.encode(families.cycle(7)), "--full")
    for v in data["results"]["spectrum"]:
        assert len(repr(abs(v)).replace(".", "").lstrip("0").split("e")[0]) <= 12


def test_selftest_and_module_entry():
    proc = subprocess.run([sys.executable, "-m", "spectral_extrema", "selftest"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["ok"] is True


def test_stdin_input():
    proc = subprocess.run([sys.executable, "-m", "spectral_extrema", "lambda", "--stdin"],
                          input="Bw\n", capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0 and json.loads(proc.stdout)["inputs"] == ["Bw"]
