from __future__ import annotations

import csv
import io
import json

import pytest

from sgnm.cli import main, resolve_m


@pytest.fixture(autouse=True)
def clean_budget(monkeypatch):
    # the CLI exports its budget through the environment
    monkeypatch.delenv("SGNM_BUDGET", raising=False)


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestCensus:
    def test_k5_row(self, capsys):
        assert main(["census", "--n", "5", "--g", "1"]) == 0
        table = rows(capsys.readouterr().out)
        assert [int(r["m"]) for r in table] == list(range(11))
        assert {"n": "5", "m": "10", "g": "1", "count": "1"} in table

    def test_rerun_matches_then_detects_change(self, tmp_path, capsys):
        out = tmp_path / "c.csv"
        assert main(["census", "--n", "4", "--out", str(out), "--stat", "maxDegree"]) == 0
        assert out.with_suffix(".json").exists()
        assert main(["census", "--n", "4", "--out", str(out)]) == 0
        out.write_text(out.read_text().replace("4,3,0,20", "4,3,0,21"))
        assert main(["census", "--n", "4", "--out", str(out)]) == 1
        err = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert err["error"] == "census mismatch"

    def test_cap(self, capsys):
        assert main(["census", "--n", "9"]) == 1
        assert "CapabilityError" in capsys.readouterr().err

    def test_missing_n_is_usage_error(self, capsys):
        assert main(["census"]) == 2
        assert json.loads(capsys.readouterr().err)["error"] == "usage"


class TestSample:
    def test_graph6_and_sidecar(self, tmp_path):
        out = tmp_path / "s.g6"
        assert main(["sample", "--n", "6", "--m", "9", "--samples", "5", "--seed", "3",
                     "--out", str(out)]) == 0
        assert len(out.read_text().splitlines()) == 5
        side = json.loads((tmp_path / "s.g6.json").read_text())
        assert side["config"]["seed"] == 3 and side["diagnostics"]["acceptance_rate"] > 0

    def test_same_seed_same_output(self, capsys):
        main(["sample", "--n", "6", "--m", "9", "--samples", "5", "--seed", "3"])
        first = capsys.readouterr().out
        main(["sample", "--n", "6", "--m", "9", "--samples", "5", "--seed", "3"])
        assert capsys.readouterr().out == first

    def test_m_and_ratio_conflict(self):
        assert main(["sample", "--n", "6", "--m", "9", "--m-ratio", "1.5"]) == 2

    def test_sampler_failure(self, capsys):
        code = main(["sample", "--n", "5", "--m", "10", "--samples", "1", "--max-rejections", "5"])
        assert code == 1
        assert json.loads(capsys.readouterr().err)["error"] == "SamplerError"


class TestRatio:
    def test_round_half_up(self):
        assert resolve_m(10, 0, 1.25) == 13

    def test_clamped_with_warning(self, capsys):
        assert resolve_m(6, 0, 3.0) == 12
        assert "clamped" in capsys.readouterr().err


class TestStats:
    def test_csv(self, tmp_path, capsys):
        src = tmp_path / "in.g6"
        src.write_text("Bw\nCF\n")
        assert main(["stats", "--in", str(src), "--pattern", "K1"]) == 0
        table = rows(capsys.readouterr().out)
        assert table[0]["n"] == "3" and table[0]["pendantEdges"] == "0"
        assert table[1]["pendantVertices"] == "3" and table[1]["app:@"] == "3"

    def test_json(self, tmp_path, capsys):
        src = tmp_path / "in.g6"
        src.write_text("Bw\n")
        assert main(["stats", "--in", str(src), "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["maxDegree"] == 2

    def test_bad_graph6(self, tmp_path, capsys):
        src = tmp_path / "in.g6"
        src.write_text("B!\n")
        assert main(["stats", "--in", str(src)]) == 1
        assert "DecodeError" in capsys.readouterr().err


class TestTrend:
    def test_connectivity_rises_with_density(self, capsys):
        code = main(["trend", "--stat", "connected", "--n", "16", "--g", "0",
                     "--m-ratio", "1.2,2.0,2.8", "--samples", "2000", "--seed", "7"])
        assert code == 0
        table = rows(capsys.readouterr().out)
        assert len(table) == 3
        est = [float(r["estimate"]) for r in table]
        assert est[0] < est[1] < est[2]
        assert all(r["method"] == "mcmc" and r["seed"] == "7" for r in table)

    def test_exact_rows(self, capsys):
        assert main(["trend", "--stat", "maxDegree", "--n", "3", "--m", "2", "--exact"]) == 0
        row = rows(capsys.readouterr().out)[0]
        assert row["ci"] == "exact" and float(row["estimate"]) == 2.0

    def test_genus_one_limit(self):
        assert main(["trend", "--n", "12", "--g", "1", "--m", "20"]) == 2


class TestGamma:
    def test_triangle(self, capsys):
        assert main(["gamma", "--n", "3", "--m-ratio", "1.0"]) == 0
        row = rows(capsys.readouterr().out)[0]
        assert int(row["count"]) == 1 and abs(float(row["value"]) - 0.5503) < 1e-4


class TestVerifyAndBudget:
    def test_verify_small(self, capsys):
        assert main(["verify", "--max-n", "4", "--max-g", "1"]) == 0
        assert json.loads(capsys.readouterr().out)["ok"] is True

    def test_budget_exit_code(self, capsys):
        code = main(["census", "--n", "7", "--g", "1", "--m", "17", "--budget", "1"])
        assert code == 3
        err = json.loads(capsys.readouterr().err)
        assert err["error"] == "budget" and err["lower"] is not None

    def test_env_overrides_flag(self, monkeypatch, capsys):
        monkeypatch.setenv("SGNM_BUDGET", "1")
        assert main(["census", "--n", "7", "--g", "1", "--m", "17", "--budget", "100000000"]) == 3
