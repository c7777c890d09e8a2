"""Tests for the command-line interface."""

import csv
import io
import json
import subprocess
import sys

import pytest

from mersenne_octonions.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSeq:
    def test_k1_mersenne_column(self, capsys):
        code, out, _ = run_cli(capsys, "seq", "--k", "1", "--n", "0..5")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [int(r["mersenne"]) for r in rows] == [0, 1, 3, 7, 15, 31]

    def test_k2_lucas_column(self, capsys):
        code, out, _ = run_cli(capsys, "seq", "--k", "2", "--n", "0..3")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [int(r["mersenne_lucas"]) for r in rows] == [2, 6, 32, 180]

    def test_round_trip_exact(self, capsys):
        code, out, _ = run_cli(capsys, "seq", "--k", "3", "--n", "60..64")
        rows = list(csv.DictReader(io.StringIO(out)))
        from mersenne_octonions.sequences import Family, seq_value

        for row in rows:
            n = int(row["n"])
            assert int(row["mersenne"]) == seq_value(Family.MERSENNE, 3, n)

    def test_empty_range_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "seq", "--n", "5..2")
        assert code == 2
        assert "error" in err

    def test_writes_file(self, tmp_path, capsys):
        out_file = tmp_path / "seq.csv"
        code, _, _ = run_cli(capsys, "seq", "--n", "0..2", "-o", str(out_file))
        assert code == 0
        assert out_file.read_text().startswith("k,n,mersenne,mersenne_lucas")


class TestOct:
    def test_coordinates(self, capsys):
        code, out, _ = run_cli(
            capsys, "oct", "--family", "mersenne", "--k", "1", "--n", "0"
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [int(rows[0][f"e{r}"]) for r in range(8)] == [0, 1, 3, 7, 15, 31, 63, 127]

    def test_both_families(self, capsys):
        code, out, _ = run_cli(capsys, "oct", "--k", "2", "--n", "0..1")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert {r["family"] for r in rows} == {"mersenne", "mersenne-lucas"}


class TestVerify:
    def test_small_grid_exit_zero(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--k", "1..2", "--n", "0..4",
            "--ij-max", "1", "--identities", "cassini,binet",
        )
        assert code == 0
        assert "cassini" in out

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--k", "2", "--n", "0..3",
            "--identities", "catalan", "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["summary"]["FAIL"] == 0

    def test_k1_general_finite_sum_all_skipped(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--k", "1", "--n", "0..3",
            "--identities", "finite_sum", "--no-specialized",
            "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["summary"]["SKIPPED"] > 0
        assert doc["summary"]["PASS"] == 0

    def test_corrupted_table_fails(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--k", "2", "--n", "1..3",
            "--identities", "cassini", "--corrupt-table", "--format", "json",
        )
        assert code == 1
        doc = json.loads(out)
        assert doc["summary"]["FAIL"] > 0
        failing = [r for r in doc["results"] if r["status"] == "FAIL"]
        assert any(c != "0" for c in failing[0]["residual"])

    def test_report_file_byte_stable(self, tmp_path, capsys):
        args = [
            "verify", "--k", "1..2", "--n", "0..3", "--ij-max", "1",
            "--identities", "docagne", "--format", "json",
        ]
        f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
        assert main(args + ["-o", str(f1)]) == 0
        assert main(args + ["-o", str(f2)]) == 0
        capsys.readouterr()
        assert f1.read_bytes() == f2.read_bytes()


class TestBench:
    def test_cross_checked_timing_table(self, capsys):
        code, out, _ = run_cli(
            capsys, "bench", "--k", "2", "--n-values", "0,1000", "--repeat", "1"
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert {r["method"] for r in rows} == {"recurrence", "matrix_power"}
        assert all(int(r["nanoseconds"]) >= 0 for r in rows)

    def test_digit_count_at_n100(self, capsys):
        code, out, _ = run_cli(
            capsys, "bench", "--k", "1", "--n-values", "100", "--repeat", "1"
        )
        rows = list(csv.DictReader(io.StringIO(out)))
        # 2^100 - 1 has 31 decimal digits
        assert all(int(r["digits"]) == 31 for r in rows)

    def test_negative_n_rejected(self, capsys):
        code, _, err = run_cli(capsys, "bench", "--n-values", "-5")
        assert code == 2


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "mersenne_octonions.cli", "seq", "--n", "0..2"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.startswith("k,n,mersenne")

    def test_unknown_subcommand(self):
        proc = subprocess.run(
            [sys.executable, "-m", "mersenne_octonions.cli", "nope"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 2
