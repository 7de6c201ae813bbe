"""End-to-end CLI checks, run in process through main()."""

import json

import pytest

from powit import BenchRecord, emit_records, parse_records
from powit.cli import main


def run_cli(*argv):
    return main(list(argv))


class TestSolve:
    def test_prints_result_fields(self, capsys):
        assert run_cli("solve", "--n", "20", "--seed", "4") == 0
        out = capsys.readouterr().out
        assert "eigenvalue:" in out
        assert "iterations:" in out
        assert "residual:" in out
        assert "converged: true" in out

    def test_squared_algorithm_and_complex_mode(self, capsys):
        assert run_cli("solve", "--n", "16", "--mode", "complex", "--alg", "squared") == 0
        assert "converged: true" in capsys.readouterr().out

    def test_rejected_input_exits_nonzero(self, capsys):
        assert run_cli("solve", "--n", "0") == 1
        assert "error:" in capsys.readouterr().err

    def test_deterministic_output(self, capsys):
        run_cli("solve", "--n", "12", "--seed", "7")
        first = capsys.readouterr().out
        run_cli("solve", "--n", "12", "--seed", "7")
        assert capsys.readouterr().out == first

    def test_bad_tolerance_exits_cleanly(self, capsys):
        assert run_cli("solve", "--n", "8", "--tol", "0") == 1
        assert "error:" in capsys.readouterr().err


class TestTopk:
    def test_prints_values_and_orthogonality(self, capsys):
        assert run_cli("topk", "--n", "12", "--k", "3", "--seed", "2") == 0
        out = capsys.readouterr().out
        assert out.count("lambda[") == 3
        assert "max_pairwise_overlap:" in out
        assert "orthogonal: true" in out

    def test_bad_k_exits_nonzero(self, capsys):
        assert run_cli("topk", "--n", "4", "--k", "9") == 1
        assert "error:" in capsys.readouterr().err


class TestBench:
    def test_writes_records_summary_and_figure(self, tmp_path, capsys):
        out = tmp_path / "records.csv"
        summary = tmp_path / "summary.json"
        figure = tmp_path / "timing.png"
        code = run_cli(
            "bench",
            "--sizes", "8:3,12:2",
            "--seed", "5",
            "--out", str(out),
            "--summary", str(summary),
            "--plot", str(figure),
        )
        assert code == 0
        records = parse_records(out)
        assert len(records) == 10
        assert {r.algorithm for r in records} == {"power", "squared"}
        payload = json.loads(summary.read_text())
        assert payload["workers"] == 1
        assert len(payload["rows"]) == 4
        assert figure.stat().st_size > 0
        stdout = capsys.readouterr().out
        assert "speedup" in stdout

    def test_complex_mode_runs(self, tmp_path):
        out = tmp_path / "records.csv"
        assert run_cli("bench", "--sizes", "8:2", "--mode", "complex", "--out", str(out)) == 0
        assert all(r.mode == "complex" for r in parse_records(out))

    def test_bad_sizes_argument_exits_nonzero(self, tmp_path, capsys):
        with pytest.raises(SystemExit):
            run_cli("bench", "--sizes", "nonsense")


class TestHist:
    @pytest.fixture()
    def records_file(self, tmp_path):
        out = tmp_path / "records.csv"
        assert run_cli("bench", "--sizes", "8:4", "--seed", "6", "--out", str(out)) == 0
        return out

    def test_linear_histogram_with_figure(self, records_file, tmp_path, capsys):
        hist_csv = tmp_path / "hist.csv"
        figure = tmp_path / "hist.png"
        code = run_cli(
            "hist",
            "--in", str(records_file),
            "--alg", "squared",
            "--scale", "linear",
            "--out", str(hist_csv),
            "--plot", str(figure),
        )
        assert code == 0
        lines = hist_csv.read_text().splitlines()
        assert lines[0] == "bin_left,bin_right,count"
        assert len(lines) > 1
        assert figure.stat().st_size > 0

    def test_log2_histogram(self, records_file, tmp_path):
        hist_csv = tmp_path / "hist.csv"
        code = run_cli(
            "hist", "--in", str(records_file), "--alg", "power",
            "--scale", "log2", "--out", str(hist_csv),
        )
        assert code == 0

    def test_empty_data_exits_nonzero(self, tmp_path, capsys):
        unconverged = BenchRecord(
            n=8, mode="real", algorithm="power", matrix_index=0, seed=1,
            wall_time=0.1, iterations=50, converged=False,
            eigenvalue=float("nan"), residual=float("nan"),
        )
        path = tmp_path / "records.csv"
        emit_records([unconverged], path)
        code = run_cli(
            "hist", "--in", str(path), "--alg", "power",
            "--scale", "linear", "--out", str(tmp_path / "hist.csv"),
        )
        assert code == 1
        assert "error:" in capsys.readouterr().err

    def test_missing_file_exits_nonzero(self, tmp_path, capsys):
        code = run_cli(
            "hist", "--in", str(tmp_path / "absent.csv"), "--alg", "power",
            "--scale", "linear", "--out", str(tmp_path / "hist.csv"),
        )
        assert code == 1
