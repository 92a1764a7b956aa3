import json
import subprocess
import sys
from pathlib import Path

import pytest

from lrfaces import __version__
from lrfaces.cli import main
from lrfaces.weights import parse_index, parse_partition, parse_weight

GOLDEN = Path(__file__).parent / "golden"
PAPER = "1,1,0,0,-1,-1"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--format", "json", *argv)
    assert code == 0, err
    return json.loads(out)


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"], 2),
        (["lr", "--lambda", "", "--mu", "", "--nu", ""], 1),
        (["lr", "--lambda", "1", "--mu", "1", "--nu", "3"], 0),
    ],
)
def test_lr(capsys, argv, expected):
    env = run_json(capsys, *argv)
    assert env["result"] == {"coefficient": expected}
    assert list(env) == ["command", "inputs", "result", "version"]
    assert env["version"] == __version__


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["--n", "6", "--lambda", PAPER, "--mu", PAPER, "--nu", PAPER], 3),
        (["--n", "3", "--lambda", "1,0,-1", "--mu", "1,0,-1", "--nu", "1,0,-1"], 2),
        (["--n", "1", "--lambda", "2", "--mu", "-5", "--nu", "3"], 1),
        (["--n", "2", "--lambda", "1,0", "--mu", "1,0", "--nu", "0,0"], 0),
    ],
)
def test_triple(capsys, argv, expected):
    assert run_json(capsys, "triple", *argv)["result"]["value"] == expected
    if int(argv[1]) <= 4:
        assert run_json(capsys, "triple", "--oracle", *argv)["result"]["value"] == expected


def test_schubert_degree(capsys):
    env = run_json(capsys, "schubert", "degree", "--r", "3", "--n", "6", "--I", "1,3,5", "--J", "1,3,5", "--K", "1,3,5")
    assert env["result"] == {"degree": 2}


def test_schubert_faces(capsys):
    env = run_json(capsys, "schubert", "faces", "--r", "1", "--n", "2")
    assert env["result"]["count"] == 3
    assert sorted(env["result"]["triples"]) == [["1", "1", "2"], ["1", "2", "1"], ["2", "1", "1"]]


def test_schubert_expand_empty(capsys):
    env = run_json(capsys, "schubert", "expand", "--r", "1", "--n", "2", "--I", "2", "--J", "2")
    assert env["result"] == {"expansion": []}


def test_horn(capsys):
    env = run_json(capsys, "horn", "--n", "6", "--lambda", PAPER, "--mu", PAPER, "--nu", PAPER)
    assert env["result"]["member"] is True
    env = run_json(capsys, "horn", "--n", "3", "--lambda", "0,0,0", "--mu", "0,0,0", "--nu", "0,0,0", "--d-variant")
    assert env["result"] == {"member": True, "trace": 0, "violated": None}
    env = run_json(capsys, "horn", "--n", "2", "--lambda", "1,0", "--mu", "0,0", "--nu", "0,0")
    assert env["result"] == {"member": False, "trace": 1, "violated": None}
    env = run_json(capsys, "horn", "--n", "2", "--lambda", "1,-1", "--mu", "0,0", "--nu", "0,0")
    assert env["result"]["violated"] == {"r": 1, "I": "1", "J": "2", "K": "2", "lhs": 1}


def test_reduce_single(capsys):
    env = run_json(
        capsys, "reduce", "--n", "6", "--lambda", PAPER, "--mu", PAPER, "--nu", PAPER,
        "--I", "1,3,5", "--J", "1,3,5", "--K", "1,3,5",
    )
    res = env["result"]
    assert (res["lhs"], res["factor_small"], res["factor_large"], res["product"]) == (3, 2, 2, 4)
    assert (res["degree"], res["on_face"], res["verdict"]) == (2, True, "lhs_leq_product")
    env = run_json(
        capsys, "reduce", "--n", "2", "--lambda", "1,-1", "--mu", "0,0", "--nu", "1,-1",
        "--I", "2", "--J", "1", "--K", "1",
    )
    assert env["result"]["verdict"] == "equal"


def test_reduce_sweep(capsys):
    env = run_json(capsys, "reduce", "--sweep", "--n", "2", "--bound", "1")
    res = env["result"]
    assert res["count"] == len(res["reports"]) > 0
    assert res["verdicts"] == {"equal": res["count"]}
    assert all(r["lhs"] == r["product"] for r in res["reports"])


def test_kron(capsys):
    assert run_json(capsys, "kron", "coeff", "--alpha", "2,1", "--beta", "2,1", "--gamma", "2,1")["result"] == {"value": 1}
    table = run_json(capsys, "kron", "table", "--n", "3")["result"]
    assert table["rows"] == ["3", "2,1", "1,1,1"]
    assert table["values"][1] == [-1, 0, 2]
    ml = run_json(capsys, "kron", "ml-check", "--alpha", "4,1", "--beta", "4,1", "--gamma", "3,2")["result"]
    assert ml == {"k": 1, "depth_lhs": 2, "depth_rhs": 2, "equality_case": True, "lr": 1}


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "lr", "--lambda", "2,x", "--mu", "1", "--nu", "1")
    assert code == 2 and out == ""
    assert len(err.strip().splitlines()) == 1
    code, _, _ = run(capsys, "triple", "--n", "2", "--lambda", "0,1", "--mu", "0,0", "--nu", "0,0")
    assert code == 2


def test_precondition_exit_code(capsys):
    code, _, err = run(capsys, "triple", "--n", "3", "--lambda", "1,0", "--mu", "0,0", "--nu", "0,0")
    assert code == 3 and "rank" in err
    code, _, _ = run(capsys, "kron", "table", "--n", "20")
    assert code == 3
    code, _, _ = run(capsys, "triple", "--oracle", "--n", "5", "--lambda", "0,0,0,0,0", "--mu", "0,0,0,0,0", "--nu", "0,0,0,0,0")
    assert code == 3


def test_oracle_bound_env(capsys, monkeypatch):
    monkeypatch.setenv("LR_REDUCE_ORACLE_BOUND", "5")
    z = "0,0,0,0,0"
    env = run_json(capsys, "triple", "--oracle", "--n", "5", "--lambda", z, "--mu", z, "--nu", z)
    assert env["result"]["value"] == 1


def test_internal_assertion_exit_code(capsys, monkeypatch):
    from lrfaces import cli
    from lrfaces.errors import TheoremViolation

    def boom(*args, **kwargs):
        raise TheoremViolation("forced", {"x": 1})

    monkeypatch.setattr(cli, "factorize", boom)
    code, _, err = run(capsys, "reduce", "--n", "2", "--lambda", "0,0", "--mu", "0,0", "--nu", "0,0", "--I", "1", "--J", "1", "--K", "2")
    assert code == 4 and "counterexample" in err


def test_inputs_round_trip(capsys):
    env = run_json(
        capsys, "reduce", "--n", "6", "--lambda", PAPER, "--mu", PAPER, "--nu", PAPER,
        "--I", "1,3,5", "--J", "1,3,5", "--K", "1,3,5",
    )
    inputs = env["inputs"]
    n = inputs["n"]
    for key in ("lambda", "mu", "nu"):
        assert str(parse_weight(inputs[key], n)) == inputs[key] == PAPER
    for key in ("I", "J", "K"):
        assert str(parse_index(inputs[key], n)) == inputs[key]
    env = run_json(capsys, "lr", "--lambda", "2,1,0", "--mu", "", "--nu", "2,1")
    assert env["inputs"]["lambda"] == "2,1"
    assert parse_partition(env["inputs"]["lambda"]) == parse_partition("2,1,0")


def test_out_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "--format", "json", "--out", str(target), "lr", "--lambda", "1", "--mu", "1", "--nu", "2")
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["result"]["coefficient"] == 1


def test_subcommand_level_format(capsys):
    code, out, _ = run(capsys, "lr", "--lambda", "1", "--mu", "1", "--nu", "2", "--format", "json")
    assert code == 0 and json.loads(out)["command"] == "lr"


def test_text_output(capsys):
    code, out, _ = run(capsys, "kron", "table", "--n", "3")
    assert code == 0
    assert "[2,1] -1  0  2" in out


GOLDEN_CASES = {
    "triple_paper.json": ["--format", "json", "triple", "--n", "6", "--lambda", PAPER, "--mu", PAPER, "--nu", PAPER],
    "reduce_paper.json": [
        "--format", "json", "reduce", "--n", "6", "--lambda", PAPER, "--mu", PAPER, "--nu", PAPER,
        "--I", "1,3,5", "--J", "1,3,5", "--K", "1,3,5",
    ],
    "faces_r1_n3.txt": ["schubert", "faces", "--r", "1", "--n", "3"],
    "expand_gr36.txt": ["schubert", "expand", "--r", "3", "--n", "6", "--I", "1,3,5", "--J", "1,3,5"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_and_deterministic(name):
    cmd = [sys.executable, "-m", "lrfaces", *GOLDEN_CASES[name]]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert first == (GOLDEN / name).read_bytes()
