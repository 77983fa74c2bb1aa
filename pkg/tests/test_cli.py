import json

import pytest

from fixed_quadrics.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, build_parser, run
from fixed_quadrics.report import NOT_EXPANDED, Report, SweepReport


def run_cli(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParser:
    def test_subcommands(self):
        args = build_parser().parse_args(["verify", "3,2,1", "--checks", "corank_exact"])
        assert args.command == "verify"
        assert args.checks == "corank_exact"

    def test_missing_command(self, capsys):
        code, _, err = run_cli(capsys)
        assert code == EXIT_USAGE
        assert "usage" in err

    def test_help(self, capsys):
        code, out, _ = run_cli(capsys, "--help")
        assert code == EXIT_OK
        assert "PARTITION SYNTAX" in out
        assert "no letter skipped" in out


class TestDet:
    def test_text(self, capsys):
        code, out, _ = run_cli(capsys, "det", "2,2,1,1", "--letters")
        assert code == EXIT_OK
        assert "det P_1    c^2*g*k - c^2*j^2" in out
        assert "det P_2    c^2" in out
        assert "det         c^4*g*k - c^4*j^2" in out

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "det", "3,2,1", "--letters", "--format", "json")
        data = json.loads(out)
        assert code == EXIT_OK
        assert data["det"] == "0"
        assert data["det_factors"] == ["0", "0", "b"]
        assert data["degeneracy"] == 1

    def test_above_symbolic_bound(self, capsys):
        code, out, _ = run_cli(
            capsys, "det", "4,2,2,2", "--format", "json", "--trials", "2"
        )
        data = json.loads(out)
        assert code == EXIT_OK
        assert data["det"] == "0"
        assert len(data["det_factors"]) == 4
        assert data["det_factors"][2:] == ["0", "0"]
        assert data["checks"]["det_consistency"]["status"] == "pass"

    def test_factors_kept_above_symbolic_bound(self, capsys):
        code, out, _ = run_cli(
            capsys, "det", "3,2,2,1", "--letters", "--symbolic-bound", "4", "--format", "json"
        )
        data = json.loads(out)
        assert code == EXIT_OK
        assert data["det"] == NOT_EXPANDED
        assert len(data["det_factors"]) == 3
        assert data["det_factors"][-1] == "b"
        assert "0" not in data["det_factors"]
        assert NOT_EXPANDED not in data["det_factors"]


class TestMatrices:
    def test_generic_text(self, capsys):
        code, out, _ = run_cli(capsys, "generic", "2,1", "--letters")
        assert code == EXIT_OK
        assert out.startswith("M:\n")
        assert "|" in out

    def test_generic_json_shows(self, capsys):
        code, out, _ = run_cli(
            capsys, "generic", "3,2,1", "--letters", "--format", "json",
            "--show", "P", "--show", "Mdoubleprime",
        )
        data = json.loads(out)
        assert data["P"] == [["b", "d", "f"], ["0", "0", "g"], ["0", "0", "h"]]
        assert data["Mdoubleprime"] == [["b", "d"], ["0", "0"]]

    def test_generic_latex(self, capsys):
        code, out, _ = run_cli(capsys, "generic", "3", "--format", "latex")
        assert "\\begin{pmatrix}" in out
        assert "v_{1,1,2}" in out

    def test_schema(self, capsys):
        code, out, _ = run_cli(capsys, "generic", "3", "--show", "schema", "--format", "json")
        assert json.loads(out)["schema"][1] == ["0", "*", "0"]

    def test_letter_overflow_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "generic", "1^7", "--letters")
        assert code == EXIT_USAGE
        assert "❌ Error:" in err


class TestRankAndWitnesses:
    def test_dim(self, capsys):
        code, out, _ = run_cli(capsys, "dim", "4,2,2,2", "--format", "json")
        data = json.loads(out)
        assert (data["dim_S"], data["dim_Q"], data["degeneracy"]) == (17, 16, 2)

    def test_rank(self, capsys):
        code, out, _ = run_cli(capsys, "rank", "3,2,1", "--format", "json")
        data = json.loads(out)
        assert code == EXIT_OK
        assert data["corank"] == 1
        assert set(k for k, v in data["checks"].items() if v["status"] != "skipped") == {
            "corank_randomized",
            "corank_exact",
        }

    def test_nullspace(self, capsys):
        code, out, _ = run_cli(capsys, "nullspace", "3,2,1", "--letters")
        assert code == EXIT_OK
        assert "corank 1" in out
        assert "v1 = {3: -d; 5: b}" in out

    def test_nullspace_json(self, capsys):
        code, out, _ = run_cli(capsys, "nullspace", "4,2,2,2", "--format", "json")
        data = json.loads(out)
        assert data["corank"] == 2
        assert data["columns"] == [3, 4, 6, 8, 10]

    def test_minor(self, capsys):
        code, out, _ = run_cli(
            capsys, "minor", "4,2,2,2", "--letters", "--symbolic-bound", "10", "--format", "json"
        )
        data = json.loads(out)
        assert data["rows"] == [1, 2, 3, 5, 6, 7, 9, 10]
        assert data["certificate"] == "symbolic"
        assert data["minor_det"] == "-b^3*j*n^4"


class TestVerify:
    def test_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "3,2,1")
        assert code == EXIT_OK
        assert "fail" not in out

    def test_unknown_check(self, capsys):
        code, _, err = run_cli(capsys, "verify", "3,2,1", "--checks", "bogus")
        assert code == EXIT_USAGE
        assert "bogus" in err

    def test_bad_partition(self, capsys):
        code, _, err = run_cli(capsys, "verify", "3,x")
        assert code == EXIT_USAGE

    def test_golden(self, capsys, golden_dir):
        code, out, _ = run_cli(
            capsys, "verify", "2,2,1,1", "--letters", "--golden", str(golden_dir / "worked_examples.json")
        )
        assert code == EXIT_OK
        assert "golden" in out

    def test_corrupted_golden_fails(self, capsys, tmp_path):
        golden = tmp_path / "golden.json"
        golden.write_text(json.dumps({"3,2,1": {"corank": 0}}))
        code, out, _ = run_cli(capsys, "verify", "3,2,1", "--golden", str(golden))
        assert code == EXIT_CHECK_FAILED
        assert "corank: expected 0, got 1" in out

    def test_missing_golden(self, capsys, tmp_path):
        code, _, _ = run_cli(capsys, "verify", "2", "--golden", str(tmp_path / "nope.json"))
        assert code == EXIT_USAGE

    def test_config_file(self, capsys, tmp_path):
        config = tmp_path / "settings.json"
        config.write_text(json.dumps({"format": "json", "seed": 7}))
        code, out, _ = run_cli(capsys, "verify", "2,1", "--config", str(config))
        assert code == EXIT_OK
        assert json.loads(out)["partition"] == [2, 1]

    def test_invalid_setting(self, capsys):
        code, _, err = run_cli(capsys, "verify", "2,1", "--trials", "0")
        assert code == EXIT_USAGE
        assert "trials" in err

    def test_timings(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "2", "--timings", "--format", "json")
        checks = json.loads(out)["checks"]
        assert all(c["seconds"] is not None for c in checks.values() if c["status"] == "pass")

    def test_letter_overflow_is_usage_error(self, capsys):
        code, out, err = run_cli(capsys, "verify", "1^7", "--letters")
        assert code == EXIT_USAGE
        assert out == ""
        assert "28 variables" in err

    def test_json_parses_back(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "3,2,1", "--format", "json")
        report = Report.model_validate_json(out)
        assert code == EXIT_OK
        assert report.corank == 1
        assert report.passed
        assert report.checks["corank_exact"].blocker is True

    def test_verbose_without_colour(self, capsys, monkeypatch):
        monkeypatch.setenv("NO_COLOR", "1")
        code, _, err = run_cli(capsys, "verify", "2", "-v")
        assert "✅ verify finished with exit code 0" in err
        assert "\033[" not in err


class TestSweep:
    def test_deterministic_json(self, capsys):
        _, first, _ = run_cli(capsys, "sweep", "--n", "4", "--format", "json", "--seed", "1")
        _, second, _ = run_cli(capsys, "sweep", "--n", "4", "--format", "json", "--seed", "1")
        assert first == second
        assert json.loads(first)["count"] == 5

    def test_latex(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "--n", "3", "--format", "latex")
        assert code == EXIT_OK
        assert out.startswith("\\begin{tabular}{lllll}")

    def test_enumeration_bound(self, capsys):
        code, _, _ = run_cli(capsys, "sweep", "--n", "13")
        assert code == EXIT_USAGE

    @pytest.mark.slow
    def test_golden_sweep(self, capsys, golden_dir):
        code, _, _ = run_cli(
            capsys, "sweep", "--n", "6", "--letters", "--golden", str(golden_dir / "worked_examples.json")
        )
        assert code == EXIT_OK

    @pytest.mark.parametrize("n", ["0", "-3"])
    def test_non_positive_n(self, capsys, n):
        code, out, err = run_cli(capsys, "sweep", "--n", n)
        assert code == EXIT_USAGE
        assert out == ""
        assert "❌ Error: n must be positive" in err

    def test_letter_overflow_is_usage_error(self, capsys):
        code, out, err = run_cli(capsys, "sweep", "--n", "7", "--letters")
        assert code == EXIT_USAGE
        assert out == ""
        assert "1,1,1,1,1,1,1: 28 variables" in err

    def test_json_parses_back(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "--n", "3", "--format", "json")
        sweep = SweepReport.model_validate_json(out)
        assert code == EXIT_OK
        assert [r.label() for r in sweep.reports] == ["3", "2,1", "1,1,1"]
        assert sweep.passed
        assert all(r.passed for r in sweep.reports)
