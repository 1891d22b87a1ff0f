import io
import json
import subprocess
import sys

import pytest

from abacus_lab import Partition, RunnerMatrix, min_weight_and_family
from abacus_lab.cli import dispatch

EX_MATRIX = "[[0,0,1,0,0],[0,0,0,0,1]]"


def run(*argv, stdin=""):
    return dispatch(list(argv), io.StringIO(stdin))


@pytest.mark.parametrize("argv, expected", [
    (["mullineux", "--e", "5", "--prime", "6,4,2"], "5,3,3,1"),
    (["mullineux", "--e", "5", "6,4,2"], "4,3,3,1,1"),
    (["core", "--e", "5", "6,4,2"], '{"core":"1,1","weight":2}'),
    (["runner-matrix", "--e", "5", "--d", "3", "6,4,2"], EX_MATRIX),
    (["j", "--e", "5", "6,4,2"], "4,3"),
    (["maximize", "--e", "5", "--d", "3", "5,3,3,1"], "6,4,2"),
    (["minimize", "--e", "5", "--d", "3", "6,4,2"], "5,3,3,1"),
    (["mullineux", "--e", "3", "-"], "-"),
])
def test_example_outputs(argv, expected):
    assert run(*argv) == (0, expected, "")


def test_render():
    code, out, _ = run("render", "--e", "5", "6,4,2")
    assert code == 0 and out.splitlines() == ["o o o o o", "o o . . o", ". . o . .", "o . . . ."]


def test_render_marks_emitted_beads():
    code, out, _ = run("mullineux", "--e", "5", "--prime", "--render", "6,4,2")
    assert code == 0 and "#" in out and out.splitlines()[-1] == "5,3,3,1"


@pytest.mark.parametrize("argv", [
    ["core", "--e", "5", "3,4"],
    ["core", "--e", "5", "x"],
    ["core", "6,4,2"],
    ["runner-matrix", "--e", "4", "--d", "2", "1"],
    ["classify", "--e", "5", "--d", "5", "1"],
    ["family", "--e", "5", "--d", "3", "--core", "1,1", "--matrix", "[[0,1]]"],
    ["verify", "--pairs", "3-5"],
])
def test_bad_input_exits_2(argv):
    code, out, err = run(*argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_precondition_exits_3():
    code, _, err = run("mullineux", "--e", "5", "1,1,1,1,1")
    assert code == 3 and "5-regular" in err
    code, _, _ = run("family", "--e", "5", "--d", "3", "--core", "6,4,2", "--matrix", EX_MATRIX)
    assert code == 3
    code, _, _ = run("minimize", "--e", "3", "--d", "2", "1,1,1")
    assert code == 3


def test_unknown_command_is_usage_error():
    assert run("frobnicate")[0] == 2


def test_classify_json():
    code, out, _ = run("classify", "--e", "5", "--d", "3", "6,4,2")
    data = json.loads(out)
    assert code == 0
    assert (data["balanced"], data["shift_balanced"], data["skewed"], data["shift_skewed"]) == (True, False, False, True)
    assert data["witnesses"]["skewed"] == [1, 3, 3]


def test_runner_matrix_json_round_trip():
    code, out, _ = run("runner-matrix", "--e", "5", "--d", "3", "--json", "6,4,2")
    assert code == 0
    R = RunnerMatrix.from_json(out)
    assert R == RunnerMatrix(3, 5, ((0, 0, 1, 0, 0), (0, 0, 0, 0, 1)))
    assert R.to_json() == out


def test_family_json_round_trip():
    code, out, _ = run("family", "--e", "5", "--d", "3", "--core", "1,1", "--matrix", EX_MATRIX)
    data = json.loads(out)
    assert code == 0
    assert data["weight"] == 2 and (data["max"], data["min"]) == ("6,4,2", "5,3,3,1")
    assert set(data["members"]) == {"6,4,2", "6,3,2,1", "5,4,3", "5,3,3,1"}
    R = RunnerMatrix.from_json(json.dumps(data["matrix"]))
    assert min_weight_and_family(Partition((1, 1)), R).to_dict() == data


def test_trace_json():
    code, out, _ = run("mullineux", "--e", "5", "--trace", "6,4,2")
    data = json.loads(out)
    assert code == 0
    assert data["emitted"] == [4, 1, 0, -3] and len(data["states"]) == 5
    assert data["result"] == "5,3,3,1"


def test_stdin_batch():
    code, out, _ = run("mullineux", "--e", "5", "--prime", stdin="6,4,2\n\n1\n-\n")
    assert (code, out.splitlines()) == (0, ["5,3,3,1", "1", "-"])
    code, out, _ = run("core", "--e", "4", "2,1", "5")
    assert [json.loads(x)["core"] for x in out.splitlines()] == ["2,1", "1"]


def test_batch_stops_on_bad_line():
    code, out, _ = run("j", "--e", "5", stdin="6,4,2\n2,3\n")
    assert code == 2 and out == ""


def test_verify_small(monkeypatch):
    monkeypatch.setenv("ABACUS_LAB_THREADS", "1")
    code, out, _ = run("verify", "--max-n", "6", "--pairs", "2:3,3:5")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and all(x["failures"] == 0 for x in lines)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "abacus_lab", "core", "--e", "5", "6,4,2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == '{"core":"1,1","weight":2}'
    proc = subprocess.run([sys.executable, "-m", "abacus_lab", "core", "--e", "5", "3,4"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stderr.startswith("error:")
