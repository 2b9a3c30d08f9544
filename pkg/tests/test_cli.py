import json

import pytest

from fuzzytl.cli import main
from fuzzytl.demo import availability, generate_day


@pytest.fixture
def table3(tmp_path):
    path = tmp_path / "tableIII.json"
    path.write_text('{"atoms":["p"],"states":[[0.1],[0.2],[1.0],[0.1]]}')
    return str(path)


class TestEval:
    def test_worked_value(self, table3, capsys):
        rc = main(
            [
                "eval",
                "--formula",
                "AG[2] p",
                "--trace",
                table3,
                "--interp",
                "zadeh",
                "--eta",
                "table:1,0.5,0.3",
            ]
        )
        assert rc == 0
        out = capsys.readouterr().out
        assert out.startswith("0.3")
        assert "Exact" in out

    def test_unbounded_on_finite_is_a_bound(self, table3, capsys):
        assert main(["eval", "--formula", "G p", "--trace", table3]) == 0
        assert "UpperBound" in capsys.readouterr().out

    def test_json_output_round_trips_bitwise(self, table3, capsys):
        rc = main(
            [
                "eval",
                "--formula",
                "AG[2] p",
                "--trace",
                table3,
                "--eta",
                "table:1,0.5,0.3",
                "--output",
                "json",
            ]
        )
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["value"] == 0.3
        assert doc["exactness"] == "Exact"
        assert doc["formula"] == "AG[2] p"
        assert doc["position"] == 0

    def test_json_value_reproduces_library_float(self, tmp_path, capsys):
        from fuzzytl.core import AvoidingFunction, Interpretation, Trace
        from fuzzytl.evaluator import EvalContext, evaluate
        from fuzzytl.parser import parse as parse_formula

        path = tmp_path / "pq.json"
        path.write_text('{"atoms":["p","q"],"states":[[0.1,0.3]]}')
        rc = main(
            [
                "eval",
                "--formula",
                "p & q",
                "--trace",
                str(path),
                "--interp",
                "product",
                "--output",
                "json",
            ]
        )
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        ctx = EvalContext(
            Trace(("p", "q"), ((0.1, 0.3),)),
            Interpretation.PRODUCT,
            AvoidingFunction.gaussian(20),
        )
        expected = evaluate(ctx, parse_formula("p & q")).value
        assert doc["value"] == expected  # bit-for-bit through the JSON text

    def test_exit_codes(self, table3, tmp_path):
        assert main(["eval", "--formula", "AG[2", "--trace", table3]) == 1
        bad = tmp_path / "bad.json"
        bad.write_text('{"atoms":["p"],"states":[[7.0]]}')
        assert main(["eval", "--formula", "p", "--trace", str(bad)]) == 2
        assert main(["eval", "--formula", "p", "--trace", table3, "--eta", "table:0.5"]) == 2
        assert main(["eval", "--formula", "X[9] p", "--trace", table3]) == 3
        assert main(["eval", "--formula", "q", "--trace", table3]) == 3

    def test_pad_zero_policy(self, table3, capsys):
        rc = main(
            ["eval", "--formula", "X[9] p", "--trace", table3, "--finite-policy", "pad-zero"]
        )
        assert rc == 0
        assert capsys.readouterr().out.startswith("0.0")

    def test_at_position(self, table3, capsys):
        assert main(["eval", "--formula", "X p", "--trace", table3, "--at", "1"]) == 0
        assert capsys.readouterr().out.startswith("1.0")


class TestRewrite:
    def test_single_rule(self, capsys):
        rc = main(
            [
                "rewrite",
                "--formula",
                "W[2] p",
                "--target",
                "rule:within-expand",
                "--eta",
                "table:1,0.5,0.3",
            ]
        )
        assert rc == 0
        assert capsys.readouterr().out.strip() == "F[2] p | X[3] O[1] p | X[4] O[2] p"

    def test_fg_dual(self, capsys):
        rc = main(["rewrite", "--formula", "G p", "--interp", "zadeh", "--target", "rule:FG-dual"])
        assert rc == 0
        assert capsys.readouterr().out.strip() == "!F!p"

    def test_rule_scope_is_enforced(self):
        rc = main(["rewrite", "--formula", "G p", "--interp", "godel", "--target", "rule:FG-dual"])
        assert rc == 2

    def test_adequate_lowering(self, capsys):
        rc = main(["rewrite", "--formula", "F p", "--interp", "zadeh", "--target", "adequate"])
        assert rc == 0
        assert capsys.readouterr().out.strip() == "true U p"

    def test_budget_exhaustion_exit_code(self, capsys):
        rc = main(
            [
                "rewrite",
                "--formula",
                "AG[4] p",
                "--interp",
                "product",
                "--target",
                "adequate",
                "--budget",
                "1000",
            ]
        )
        assert rc == 4

    def test_verify_prints_difference(self, table3, capsys):
        rc = main(
            [
                "rewrite",
                "--formula",
                "W[1] p",
                "--target",
                "rule:within-expand",
                "--eta",
                "table:1,0.5,0.3",
                "--verify",
                table3,
            ]
        )
        assert rc == 0
        out = capsys.readouterr().out
        assert "difference: 0.000e+00" in out


class TestCheck:
    def test_oracle_suite_passes(self, capsys):
        assert main(["check", "--suite", "oracle", "--cases", "40", "--seed", "7"]) == 0
        out = capsys.readouterr().out
        assert "pass" in out and "FAIL" not in out

    def test_all_suites_small(self, capsys):
        assert main(["check", "--suite", "all", "--cases", "16", "--seed", "3"]) == 0

    def test_law_failure_exits_5(self, capsys, monkeypatch):
        from fuzzytl.checks import SuiteReport

        def broken(seed, cases):
            report = SuiteReport("oracle")
            report.check("some-law", False, lambda: "counterexample here")
            return report

        monkeypatch.setitem(__import__("fuzzytl.cli", fromlist=["SUITES"]).SUITES, "oracle", broken)
        assert main(["check", "--suite", "oracle"]) == 5
        assert "counterexample here" in capsys.readouterr().out


class TestGenDemo:
    def test_deterministic_bytes(self, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        assert main(["gen-demo", "--minutes", "40", "--seed", "9", "--out", str(a)]) == 0
        assert main(["gen-demo", "--minutes", "40", "--seed", "9", "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_generated_trace_loads_and_evaluates(self, tmp_path, capsys):
        path = tmp_path / "day.csv"
        assert main(["gen-demo", "--minutes", "60", "--seed", "1", "--out", str(path)]) == 0
        capsys.readouterr()
        rc = main(["eval", "--formula", "AG[59] a", "--trace", str(path), "--eta", "gauss:20"])
        assert rc == 0
        value = float(capsys.readouterr().out.split()[0])
        assert 0.0 <= value <= 1.0

    def test_unwritable_path(self, tmp_path):
        rc = main(["gen-demo", "--minutes", "5", "--out", str(tmp_path / "no" / "dir" / "x.json")])
        assert rc == 2


class TestAvailabilityFormula:
    def test_zero_at_lower_branch_edge(self):
        variance = 4.0
        assert availability(-1.5 * variance, variance) == 0.0
        assert availability(-1.5 * variance - 0.01, variance) == 0.0

    def test_one_from_half_variance_below(self):
        variance = 4.0
        assert availability(-0.5 * variance, variance) == 1.0
        assert availability(0.0, variance) == 1.0

    def test_linear_in_between(self):
        variance = 4.0
        assert availability(-variance, variance) == pytest.approx(0.5)

    def test_day_trace_shape(self):
        trace = generate_day(30, seed=4)
        assert trace.atoms == ("a", "d", "c", "s", "p")
        assert len(trace) == 30
        for row in trace.states:
            assert all(0.0 <= v <= 1.0 for v in row)
            assert row[1] in (0.0, 1.0) and row[2] in (0.0, 1.0) and row[3] in (0.0, 1.0)
