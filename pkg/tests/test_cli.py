"""Command-line interface: scenario runs, exit codes, determinism, fuzz."""

import json
import subprocess
import sys

import pytest

from nonadd.cli import main
from nonadd.scenarios import BUILTIN_SCENARIOS, Scenario, ScenarioError, builtin_scenario


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def run_cli_json(args, capsys):
    code = main(args + ["--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestRun:
    def test_counterexample_builtin_passes(self, capsys):
        code, doc = run_cli_json(["run", "counterexample"], capsys)
        assert code == 0
        task = doc["report"]["tasks"][0]
        assert task["verdict"] == "pass"
        assert task["report"]["lhs"] == 0.25
        assert task["report"]["rhs_sum"] == 0.125
        assert task["report"]["violated"] is True

    @pytest.mark.parametrize("name", sorted(BUILTIN_SCENARIOS))
    def test_all_builtins_pass(self, name, capsys):
        code, _ = run_cli(["run", name], capsys)
        assert code == 0, name

    def test_undefined_reference_exits_2(self, tmp_path, capsys):
        doc = builtin_scenario("two_point_integrals")
        doc["tasks"][0]["measure"] = "missing"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, _ = run_cli(["run", str(path)], capsys)
        assert code == 2

    def test_malformed_document_names_field(self, tmp_path):
        doc = {"version": 1, "space": {"n": 2}, "tasks": "oops"}
        path = tmp_path / "bad2.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(ScenarioError, match="tasks"):
            Scenario(doc)

    def test_math_failure_exits_1(self, tmp_path, capsys):
        doc = {
            "version": 1,
            "space": {"n": 2},
            "measures": {"mu": {"kind": "explicit", "table": [0, 0.3, 0.6, 0.8]}},
            "functions": {"f": [0.5, 0.2]},
            "tasks": [{"task": "integral", "kind": "sugeno", "function": "f",
                       "measure": "mu", "expect_value": 0.9}],
        }
        path = tmp_path / "fail.json"
        path.write_text(json.dumps(doc))
        code, doc_out = run_cli_json(["run", str(path)], capsys)
        assert code == 1
        assert doc_out["report"]["summary"]["failed"] == 1

    def test_non_subadditive_metric_task_reports_triangle_witness(self, tmp_path,
                                                                  capsys):
        # measure with a planted union above the sum of its parts
        doc = {
            "version": 1,
            "space": {"n": 2},
            "measures": {"mu": {"kind": "explicit", "table": [0, 0.1, 0.1, 0.9]}},
            "tasks": [{"task": "metric_axioms", "kind": "kyfan", "measure": "mu",
                       "trials": 20}],
        }
        path = tmp_path / "tri.json"
        path.write_text(json.dumps(doc))
        code, out = run_cli_json(["run", str(path)], capsys)
        assert code == 1
        task = out["report"]["tasks"][0]
        assert task["outcome"] == "hypothesis-failed"
        assert task["error_detail"]["triangle_violation"]["holds"] is True

    def test_expectation_inversion(self, tmp_path, capsys):
        doc = {
            "version": 1,
            "space": {"n": 2},
            "measures": {"mu": {"kind": "explicit", "table": [0, 0.1, 0.1, 0.9]}},
            "tasks": [{"task": "check_measure", "measure": "mu",
                       "property": "subadditive", "expect": "fails"},
                      {"task": "triangle_search", "measure": "mu",
                       "expect": "holds"}],
        }
        path = tmp_path / "expect.json"
        path.write_text(json.dumps(doc))
        code, out = run_cli_json(["run", str(path)], capsys)
        assert code == 0

    def test_witness_feeds_back_as_scenario(self, tmp_path, capsys):
        # take the witness pair from a failing subadditivity check and replay
        # it as an explicit expectation in a fresh scenario
        doc = {
            "version": 1,
            "space": {"n": 2},
            "measures": {"mu": {"kind": "explicit", "table": [0, 0.1, 0.1, 0.9]}},
            "tasks": [{"task": "check_measure", "measure": "mu",
                       "property": "subadditive"}],
        }
        path = tmp_path / "w1.json"
        path.write_text(json.dumps(doc))
        code, out = run_cli_json(["run", str(path)], capsys)
        assert code == 1
        witness = out["report"]["tasks"][0]["result"]["witness"]
        assert witness["mu_union"] > witness["mu_a"] + witness["mu_b"]

    def test_inf_token_accepted(self, tmp_path, capsys):
        doc = {
            "version": 1,
            "space": {"n": 2},
            "scale": {"upper": "inf", "closed": True},
            "measures": {"mu": {"kind": "explicit", "table": [0, 2.0, 3.0, "inf"]}},
            "functions": {"f": [6.0, 6.0]},
            "tasks": [{"task": "integral", "kind": "sugeno", "function": "f",
                       "measure": "mu", "expect_value": 6.0}],
        }
        path = tmp_path / "inf.json"
        path.write_text(json.dumps(doc))
        code, _ = run_cli(["run", str(path)], capsys)
        assert code == 0


class TestDeterminism:
    def test_reports_identical_modulo_timing(self, capsys):
        code1, doc1 = run_cli_json(["run", "two_point_integrals", "--seed", "5"], capsys)
        code2, doc2 = run_cli_json(["run", "two_point_integrals", "--seed", "5"], capsys)
        assert code1 == code2 == 0
        assert json.dumps(doc1["report"], sort_keys=True) == \
            json.dumps(doc2["report"], sort_keys=True)

    def test_fuzz_deterministic_per_seed(self, capsys):
        a = run_cli_json(["fuzz", "sugeno_identity", "--trials", "30", "--seed", "9"],
                         capsys)[1]
        b = run_cli_json(["fuzz", "sugeno_identity", "--trials", "30", "--seed", "9"],
                         capsys)[1]
        assert json.dumps(a["report"], sort_keys=True) == \
            json.dumps(b["report"], sort_keys=True)


class TestFuzzCommand:
    def test_known_campaign(self, capsys):
        code, doc = run_cli_json(["fuzz", "plus_assoc_comonotone", "--trials", "40",
                                  "--seed", "2"], capsys)
        assert code == 0
        assert doc["report"]["campaign"]["passed"] == 40

    def test_unknown_campaign_exits_2(self, capsys):
        code, _ = run_cli(["fuzz", "unknown_theorem"], capsys)
        assert code == 2

    def test_list(self, capsys):
        code, out = run_cli(["--list"], capsys)
        assert code == 0
        assert "counterexample" in out and "mh_upper" in out


class TestSubprocessEntry:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "nonadd", "run", "counterexample"],
            capture_output=True, text=True, timeout=120)
        assert proc.returncode == 0
        assert "pass" in proc.stdout

    def test_parallel_fuzz_matches_sequential_verdict(self):
        seq = subprocess.run(
            [sys.executable, "-m", "nonadd", "fuzz", "oracle_agreement",
             "--trials", "24", "--seed", "3", "--format", "json"],
            capture_output=True, text=True, timeout=300)
        par = subprocess.run(
            [sys.executable, "-m", "nonadd", "fuzz", "oracle_agreement",
             "--trials", "24", "--seed", "3", "--jobs", "2", "--format", "json"],
            capture_output=True, text=True, timeout=300)
        assert seq.returncode == 0 and par.returncode == 0
        a = json.loads(seq.stdout)["report"]["campaign"]
        b = json.loads(par.stdout)["report"]["campaign"]
        assert a["failed"] == b["failed"] == 0
        assert a["trials"] == b["trials"] == 24
