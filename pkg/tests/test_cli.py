import json

import pytest

from coxeter_lab.cli import run, to_tsv

E7 = json.dumps({
    "vertices": ["a", "b", "c", "d", "e", "f", "g", "h"],
    "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "e"], ["e", "f"], ["f", "g"], ["d", "h"]],
})


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_inline_and_path(capsys, tmp_path):
    code, out, _ = call(capsys, "classify", "--graph-json", E7)
    doc = json.loads(out)
    assert code == 0 and doc["class"] == "ExtendedDynkin" and doc["kind"] == "E7~"
    assert doc["u"]["d"] == "4"
    f = tmp_path / "e7.json"
    f.write_text(E7)
    code, out2, _ = call(capsys, "classify", "--graph", str(f))
    assert code == 0 and out2 == out


def test_enum_and_rho(capsys):
    code, out, _ = call(capsys, "enum-k", "--alpha", "0", "--target", "4")
    assert code == 0 and json.loads(out) == [[5, 2, 1], [3, 3, 1], [2, 2, 2], [1, 1, 1, 1]]
    assert json.loads(call(capsys, "rho", "--alpha", "0", "--n", "2")[1]) == "4/3"
    assert json.loads(call(capsys, "rho", "--alpha", "1/2", "--seq", "1,1,1,inf")[1]) == "9/2"


def test_tsv_output(capsys):
    code, out, _ = call(capsys, "--format", "tsv", "enum-n", "--target", "4")
    lines = out.strip().split("\n")
    assert code == 0 and lines[0] == "index\tvalue" and lines[1] == "0\t[6,2,1]"
    assert to_tsv({"a": 1}) == "key\tvalue\na\t1"


def test_output_is_byte_stable(capsys):
    argv = ["factor", "--star", "2,2,2", "--vector", "[2,1,0,1,0,1,1]"]
    first = call(capsys, *argv)
    assert first[0] == 0
    assert call(capsys, *argv) == first


@pytest.mark.parametrize("argv", [
    ["reflect", "--star", "1,1,1", "--vector", "[0,1,0,0]", "--vertex", "center"],
    ["orbit", "--star", "1,1,1,1", "--vector", "[1,0,0,0,0]"],
    ["defect", "--star", "2,2,2", "--vector", "[1,0,0,0,0,0,0]"],
    ["singular", "--star", "3,3,1", "--vector", "[1,1,1,1,1,1,1,1]", "--bound", "50"],
    ["standard-char", "--star", "3,3,1", "--parity", "odd", "--index", "2", "--iterate"],
    ["standard-char", "--star", "3,3,1", "--parity", "even", "--index", "3", "--closed-form"],
    ["simplest", "--star", "2,2,2", "--vertex", "center"],
    ["imaginary-root", "--star", "5,2,1"],
    ["phi-step", "--star", "2,2,2", "--d", "[1,0,0,0,0,0,0]", "--f", "[0,1,1,1,1,1,1]",
     "--parity", "even"],
    ["separating", "--target", "4"],
    ["dominated", "--target", "4", "--seq", "[6,2,1]"],
    ["rationality", "--seq", "2,2,2"],
])
def test_every_subcommand_succeeds(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 0, err
    json.loads(out)


def test_domain_error_names_the_library_error(capsys):
    dup = json.dumps({"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]})
    code, _, err = call(capsys, "classify", "--graph-json", dup)
    assert code == 1 and err.startswith("DuplicateEdge")
    code, _, err = call(capsys, "phi-step", "--star", "2,2,2", "--d", "[1,0,0,0,0,0,0]",
                        "--f", "[0,1,0,1,0,1,0]", "--parity", "odd")
    assert code == 1 and err.startswith("LeavesPositiveCone")


@pytest.mark.parametrize("argv", [
    ["rho", "--bogus"],
    ["classify"],
    ["rho", "--n", "x"],
    ["enum-k", "--target", "x"],
    ["reflect", "--star", "1,1,1", "--vector", "[0.5,1,0,0]", "--vertex", "center"],
    ["standard-char", "--star", "2,2,2", "--parity", "odd", "--index", "-1"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2 and "usage error" in err


def test_max_steps_env(capsys, monkeypatch):
    monkeypatch.setenv("COXETER_LAB_MAX_STEPS", "3")
    code, out, _ = call(capsys, "singular", "--star", "2,2,2,2", "--vector", "[1,1,1,1,1,1,1,1,1]")
    assert code == 0 and json.loads(out) == {"verdict": "Unknown", "bound": 3}
