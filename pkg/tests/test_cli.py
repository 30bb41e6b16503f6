import json

import pytest

from turkshead.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBasicCommands:
    def test_count_plain(self, capsys):
        code, out, _ = run(capsys, "count", "5", "11")
        assert code == 0 and "1331" in out

    def test_count_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "count", "5", "11")
        assert code == 0
        assert json.loads(out) == {"n": 5, "r": 11, "count": 1331}

    def test_det(self, capsys):
        code, out, _ = run(capsys, "-f", "json", "det", "4")
        assert json.loads(out) == {"n": 4, "determinant": 45}

    def test_psi(self, capsys):
        code, out, _ = run(capsys, "-f", "json", "psi", "11")
        assert json.loads(out) == {"r": 11, "psi": 5, "steps_scanned": 5}

    def test_psi_table_csv(self, capsys):
        code, out, _ = run(capsys, "--format", "csv", "psi-table", "--max", "11")
        lines = out.strip().splitlines()
        assert code == 0 and len(lines) == 10
        assert lines[0] == "2,3" and lines[-1] == "11,5"

    def test_psi_table_row_count_at_185(self, capsys):
        code, out, _ = run(capsys, "--format", "csv", "psi-table", "--max", "185")
        assert len(out.strip().splitlines()) == 184

    def test_mincol_json(self, capsys):
        code, out, _ = run(capsys, "-f", "json", "mincol", "5", "11")
        data = json.loads(out)
        assert data["kind"] == "exact" and data["lower"] == 5
        assert data["witness"]["input"] == [1, 7, 0]

    def test_mincol_plain_only_trivial(self, capsys):
        code, out, _ = run(capsys, "mincol", "5", "7")
        assert code == 0 and "only trivial" in out

    def test_construct(self, capsys):
        code, out, _ = run(capsys, "-f", "json", "construct", "11")
        data = json.loads(out)
        assert data["input"] == [1, 7, 0] and data["colors_used"] == [0, 1, 2, 4, 7]

    def test_stats(self, capsys):
        code, out, _ = run(capsys, "-f", "json", "stats", "5")
        assert json.loads(out) == {"count": 5, "matched": 3, "ratio": 0.6}

    def test_usage_csv(self, capsys):
        code, out, _ = run(capsys, "-f", "csv", "usage", "2")
        lines = out.strip().splitlines()
        assert code == 0 and lines[0].startswith("13,") and lines[1].startswith("17,")

    def test_verify_determinants(self, capsys):
        code, out, _ = run(capsys, "verify", "determinants")
        assert code == 0 and out.startswith("PASS determinants/")


class TestExitCodes:
    def test_invalid_arguments_exit_1(self, capsys):
        assert run(capsys, "count", "0", "5")[0] == 1
        assert run(capsys, "count", "3", "1")[0] == 1

    def test_unknown_command_exit_1(self, capsys):
        assert run(capsys, "frobnicate")[0] == 1

    def test_csv_rejected_for_verdicts(self, capsys):
        assert run(capsys, "-f", "csv", "mincol", "5", "11")[0] == 1

    def test_budget_exceeded_exit_2(self, capsys):
        code, _, err = run(capsys, "--psi-cap", "100", "psi", "150")
        assert code == 2 and "budget" in err

    def test_construct_rejects_composite(self, capsys):
        assert run(capsys, "construct", "9")[0] == 1


class TestDeterminism:
    def test_psi_table_byte_identical(self, capsys):
        _, first, _ = run(capsys, "-f", "csv", "psi-table", "--max", "60")
        _, second, _ = run(capsys, "-f", "csv", "psi-table", "--max", "60")
        assert first == second

    def test_stats_independent_of_workers(self, capsys):
        _, serial, _ = run(capsys, "-f", "json", "--workers", "1", "stats", "200")
        _, sharded, _ = run(capsys, "-f", "json", "--workers", "3", "stats", "200")
        assert serial == sharded


class TestEnvironmentOverrides:
    def test_env_format(self, capsys, monkeypatch):
        monkeypatch.setenv("THK_FORMAT", "json")
        code, out, _ = run(capsys, "det", "2")
        assert json.loads(out) == {"n": 2, "determinant": 5}

    def test_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("THK_FORMAT", "json")
        code, out, _ = run(capsys, "--format", "plain", "det", "2")
        assert out.strip() == "det THK(3, 2) = 5"

    def test_env_psi_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("THK_PSI_CAP", "100")
        assert run(capsys, "psi", "150")[0] == 2

    def test_bad_env_value(self, capsys, monkeypatch):
        monkeypatch.setenv("THK_WORKERS", "lots")
        assert run(capsys, "det", "2")[0] == 1
