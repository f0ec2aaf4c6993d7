import importlib
import json
import os
import subprocess
import sys

import pytest

from golden_cases import (ROOT, golden_path, load_cases, render, run_case)

CASES = load_cases()
# the package re-exports a function under the same name as this module
crosscheck_module = importlib.import_module("dbcause.crosscheck")
Q = "@data/path.query"


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_output(name):
    code, out, err = run_case(CASES[name])
    assert err == ""
    assert render(code, out) == golden_path(name).read_text(encoding="utf-8")


@pytest.mark.parametrize("name", sorted(n for n in CASES if n.endswith("json")))
def test_json_mode_emits_one_document(name):
    code, out, _ = run_case(CASES[name])
    doc = json.loads(out)
    assert set(doc) == {"input", "result", "stats"}
    assert isinstance(doc["stats"]["nodes"], int)
    assert out.endswith("}\n") and out.count("\n}\n") == 1


def test_every_command_has_a_golden_case():
    from dbcause.cli import COMMANDS
    assert {argv[0] for argv in CASES.values()} == set(COMMANDS)


def test_responsibility_serialization():
    _, out, _ = run_case(CASES["causes_path_json"])
    doc = json.loads(out)
    rho = {c["tuple"]: c["responsibility"] for c in doc["result"]["causes"]}
    assert rho["S(a3)"] == {"num": 1, "den": 1, "decimal": 1.0}
    assert rho["S(a4)"] == {"num": 1, "den": 2, "decimal": 0.5}
    assert doc["result"]["most_responsible"] == ["S(a3)"]


def test_timing_is_opt_in():
    code, out, _ = run_case(CASES["causes_path_json"] + ["--timing"])
    assert code == 0
    assert "wall_time_s" in json.loads(out)["stats"]


@pytest.mark.parametrize("argv, code, kind", [
    (["causes", "--facts", "data/path.facts", "--query", "q() :- S(X"], 2,
     "ParseError"),
    (["causes", "--facts", "data/missing.facts", "--query", Q], 2,
     "FileNotFoundError"),
    (["causes", "--facts", "data/path.facts", "--query",
      "q(X) :- S(X)."], 2, "NotBoolean"),
    (["diagnose", "--facts", "data/empty.facts", "--query", Q], 2,
     "ObservationAbsent"),
    (["responsibility", "--facts", "data/path_partitioned.facts", "--query", Q,
      "--tuple", "R(a4,a3)"], 2, "NotEndogenous"),
    (["causes", "--facts", "data/path.facts", "--query", Q, "--budget", "3"], 3,
     "ResourceExceeded"),
    (["crosscheck", "--facts", "data/path.facts", "--query", Q,
      "--oracle-budget", "2"], 3, "BudgetExceeded"),
])
def test_error_exit_codes(argv, code, kind):
    got, out, err = run_case(argv)
    assert got == code
    assert out == ""
    assert err.startswith(f"error: {kind}:")
    got, _, err = run_case(argv + ["--json"])
    assert json.loads(err)["error"]["type"] == kind


def test_usage_errors_exit_2(capsys):
    assert run_case(["causes", "--query", Q])[0] == 2
    assert run_case(["frobnicate"])[0] == 2
    capsys.readouterr()


def test_crosscheck_failure_exits_1(monkeypatch):
    # sabotage one reduction and watch the report catch it
    def wrong(d, query, budget=None):
        return crosscheck_module.brute_causes(d.delete(d.endogenous), query)

    monkeypatch.setattr(crosscheck_module, "causes_from_repairs", wrong)
    code, out, _ = run_case(["crosscheck", "--facts", "data/path.facts",
                             "--query", Q])
    assert code == 1
    assert "FAIL  causes_from_repairs" in out
    assert "counterexample" in out


def test_module_entry_point_is_byte_stable_across_hash_seeds():
    argv = [sys.executable, "-m", "dbcause"] + CASES["diagnose_path_json"]
    outputs = set()
    for seed in ("0", "1", "12345"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        proc = subprocess.run(argv, cwd=ROOT, env=env, capture_output=True)
        assert proc.returncode == 0, proc.stderr
        outputs.add(proc.stdout)
    assert len(outputs) == 1
