import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

import ducci
from ducci import cli
from ducci.cache import (CacheRecord, append_record, load_cache,
                         record_from_report, report_from_record)
from ducci.closure import classify_fast
from ducci.core import RingParams


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(argv)
    return code, out.getvalue(), err.getvalue()


class TestCache:
    def test_round_trip(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        rep = classify_fast(RingParams(4, 3))
        rec = record_from_report(rep, wall_ms=7, tool_version=ducci.__version__)
        append_record(path, rec)
        loaded = load_cache(path, ducci.__version__)
        assert loaded[(4, 3)] == rec
        assert report_from_record(loaded[(4, 3)]) == rep

    def test_last_record_wins(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        base = dict(n=4, m=3, L=1, P=8, classification="h-closed", alpha=2,
                    betas_raw=[3], beta_canonical=-1, gamma=4, anomalies=[],
                    steps=10, tool_version="0.1.0")
        append_record(path, CacheRecord(wall_ms=1, **base))
        append_record(path, CacheRecord(wall_ms=2, **base))
        assert load_cache(path, "0.1.0")[(4, 3)].wall_ms == 2

    def test_foreign_version_ignored(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        rep = classify_fast(RingParams(4, 3))
        append_record(path, record_from_report(rep, 1, "some-other-version"))
        assert load_cache(path, ducci.__version__) == {}

    def test_malformed_lines_skipped(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        path.write_text('not json\n{"unexpected": 1}\n', encoding="utf-8")
        assert load_cache(path, ducci.__version__) == {}


class TestClassifyCommand:
    def test_json(self):
        code, out, _ = run_cli(["classify", "--n", "4", "--m", "3",
                                "--format", "json"])
        assert code == 0
        obj = json.loads(out)
        assert obj["classification"] == "h-closed"
        assert obj["alpha"] == 2 and obj["beta_canonical"] == -1

    def test_trivial(self):
        code, out, _ = run_cli(["classify", "--n", "2", "--m", "2",
                                "--format", "json"])
        assert code == 0
        assert json.loads(out)["classification"] == "h-closed-trivial"

    def test_invalid_args_exit_2(self):
        code, _, _ = run_cli(["classify", "--n", "0", "--m", "5"])
        assert code == 2

    def test_missing_flag_exit_2(self):
        code, _, _ = run_cli(["classify", "--n", "4"])
        assert code == 2

    def test_budget_exit_3(self):
        code, _, _ = run_cli(["classify", "--n", "11", "--m", "17",
                              "--max-steps", "100"])
        assert code == 3

    def test_stdout_deterministic(self):
        runs = {run_cli(["classify", "--n", "9", "--m", "8",
                         "--format", "json"])[1] for _ in range(2)}
        assert len(runs) == 1


class TestOracleCommand:
    def test_universal_betas(self):
        code, out, _ = run_cli(["oracle", "--n", "12", "--m", "3",
                                "--format", "json"])
        assert code == 0
        obj = json.loads(out)
        assert obj["universal_betas"] == [0, 3, 6, 9]
        assert obj["classification"] == "weakly-h-closed"

    def test_cap_exit_3(self):
        code, _, _ = run_cli(["oracle", "--n", "12", "--m", "3",
                              "--max-states", "100"])
        assert code == 3


class TestCoeffCommand:
    def test_polypow(self):
        code, out, _ = run_cli(["coeff", "--n", "3", "--m", "100", "--r", "4",
                                "--format", "json"])
        assert code == 0
        assert json.loads(out) == {"r": 4, "n": 3, "m": 100,
                                   "values": [5, 5, 6]}

    def test_exact(self):
        code, out, _ = run_cli(["coeff", "--n", "3", "--r", "4",
                                "--mode", "binomial", "--format", "json"])
        assert code == 0
        assert json.loads(out)["m"] == "exact"

    def test_triple_requires_n3(self):
        code, _, _ = run_cli(["coeff", "--n", "4", "--m", "5", "--r", "4",
                              "--mode", "triple"])
        assert code == 2

    def test_missing_modulus(self):
        code, _, _ = run_cli(["coeff", "--n", "3", "--r", "4"])
        assert code == 2


class TestGraphCommand:
    def test_figure_component(self, tmp_path):
        out_path = tmp_path / "g.dot"
        code, out, _ = run_cli(["graph", "--n", "3", "--m", "6",
                                "--start", "0,0,1", "--out", str(out_path)])
        assert code == 0
        assert "nodes=12" in out and "cycle=6" in out
        dot = out_path.read_text(encoding="utf-8")
        assert dot.startswith("digraph ducci {\n")
        assert dot.count("->") == 12

    def test_stdout_mode(self):
        code, out, err = run_cli(["graph", "--n", "2", "--m", "2",
                                  "--start", "0,0", "--out", "-"])
        assert code == 0
        assert out.startswith("digraph ducci {\n")
        assert '"0,0" -> "0,0";' in out
        assert "nodes=4" in err

    def test_bad_start_tuple(self):
        code, _, _ = run_cli(["graph", "--n", "3", "--m", "6",
                              "--start", "0,0,9", "--out", "-"])
        assert code == 2

    def test_cap_exit_3(self):
        code, _, _ = run_cli(["graph", "--n", "3", "--m", "10",
                              "--start", "0,0,1", "--out", "-",
                              "--max-states", "5"])
        assert code == 3


class TestVerifyCommand:
    def test_theorem_2_pairs(self):
        code, out, _ = run_cli(["verify", "--theorem", "2",
                                "--pairs", "4:3,6:5,8:7,12:11"])
        assert code == 0
        assert out.count("PASS") == 4

    def test_theorem_2_bad_pair(self):
        code, _, _ = run_cli(["verify", "--theorem", "2", "--pairs", "4:5"])
        assert code == 2

    def test_theorem_11(self):
        code, out, _ = run_cli(["verify", "--theorem", "1.1",
                                "--l-max", "4"])
        assert code == 0
        assert out.count("PASS") == 4

    def test_theorem_13_reports_identity_info(self):
        code, out, _ = run_cli(["verify", "--theorem", "1.3",
                                "--l-max", "1", "--p-list", "5"])
        assert code == 0
        assert "INFO" in out

    def test_unknown_selector(self):
        code, _, _ = run_cli(["verify", "--theorem", "9"])
        assert code == 2


class TestScanCommand:
    def test_scan_family(self):
        code, out, _ = run_cli(["scan", "--family", "even-prime-power",
                                "--n", "4,6", "--p-max", "12",
                                "--format", "json"])
        assert code == 0
        rows = json.loads(out)
        assert any(r["n"] == 4 and r["m"] == 3 and r["agree"] for r in rows)

    def test_unknown_family_exit_2(self):
        code, _, _ = run_cli(["scan", "--family", "nope"])
        assert code == 2


class TestTableCommand:
    PAIRS = "4:3,4:9,3:6,12:3,2:2"

    def test_csv_shape(self, tmp_path):
        cache = tmp_path / "c.jsonl"
        code, out, _ = run_cli(["table", "--pairs", self.PAIRS,
                                "--cache", str(cache)])
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "n,m,L,P,alpha,beta_canonical,betas_raw,gamma,classification"
        assert len(lines) == 6
        # partitioned by category: h-closed rows first, trivial at the end
        assert lines[1].startswith("4,3,") and lines[1].endswith("h-closed")
        assert lines[-1].endswith("h-closed-trivial")

    def test_cache_resume(self, tmp_path):
        cache = tmp_path / "c.jsonl"
        code1, out1, err1 = run_cli(["table", "--pairs", self.PAIRS,
                                     "--cache", str(cache)])
        n_lines = cache.read_text().count("\n")
        code2, out2, err2 = run_cli(["table", "--pairs", self.PAIRS,
                                     "--cache", str(cache)])
        assert (code1, code2) == (0, 0)
        assert out1 == out2
        assert cache.read_text().count("\n") == n_lines
        assert "nothing to compute" in err2

    def test_jobs_do_not_change_output(self, tmp_path):
        _, out1, _ = run_cli(["table", "--pairs", self.PAIRS,
                              "--cache", str(tmp_path / "a.jsonl"),
                              "--jobs", "1"])
        _, out2, _ = run_cli(["table", "--pairs", self.PAIRS,
                              "--cache", str(tmp_path / "b.jsonl"),
                              "--jobs", "4"])
        assert out1 == out2

    def test_without_cache_path(self):
        code, out, _ = run_cli(["table", "--pairs", "4:3", "--format", "json"])
        assert code == 0
        assert json.loads(out)["rows"][0]["classification"] == "h-closed"

    def test_expect_comparison(self, tmp_path):
        expect = tmp_path / "expect.csv"
        expect.write_text("n,m,classification,alpha,beta\n"
                          "4,3,h-closed,2,-1\n"
                          "4,9,h-closed,6,-1\n", encoding="utf-8")
        code, out, _ = run_cli(["table", "--pairs", "4:3,4:9",
                                "--expect", str(expect), "--format", "json"])
        assert code == 0
        obj = json.loads(out)
        cmp_by_pair = {(c["n"], c["m"]): c for c in obj["expect"]}
        assert cmp_by_pair[(4, 3)]["agree"] is True
        # printed beta for (4,9) is +1; the file above deliberately says -1
        assert cmp_by_pair[(4, 9)]["agree"] is False

    def test_generator_grid(self):
        code, out, _ = run_cli(["table", "--grid-n", "4", "--m-min", "3",
                                "--m-max", "11", "--m-filter",
                                "prime-minus-one", "--format", "json"])
        assert code == 0
        rows = json.loads(out)["rows"]
        assert {(r["n"], r["m"]) for r in rows} == {(4, 3), (4, 7), (4, 11)}

    def test_no_pairs_exit_2(self):
        code, _, _ = run_cli(["table"])
        assert code == 2

    def test_unresolved_rows_exit_3(self, tmp_path):
        code, out, _ = run_cli(["table", "--pairs", "11:17,4:3",
                                "--max-steps", "100", "--format", "csv",
                                "--cache", str(tmp_path / "c.jsonl")])
        assert code == 3
        assert "unresolved" in out
        # the resolved pair still classified and was cached
        assert "4,3,1,8,2,-1,3,4,h-closed" in out
        cached = load_cache(tmp_path / "c.jsonl", ducci.__version__)
        assert (4, 3) in cached and (11, 17) not in cached
