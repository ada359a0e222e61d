import json
import math

import pytest

from polarcalc.cli import main


def run(argv):
    return main(argv)


def test_verify_small_suite_exit_zero(tmp_path):
    out = tmp_path / "report.jsonl"
    code = run(["verify", "--suite", "classical", "--dim", "2", "--p", "1",
                "--trials", "1", "--mc-samples", "5000", "--seed", "7",
                "--output", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines
    payload = json.loads(lines[0])
    assert {"check_id", "lhs", "rhs", "verdict", "instance"} <= payload.keys()


def test_verify_unknown_suite_exits_two(tmp_path):
    assert run(["verify", "--suite", "nope", "--output",
                str(tmp_path / "x")]) == 2


def test_verify_bad_trials_exits_two(tmp_path):
    assert run(["verify", "--suite", "classical", "--trials", "0",
                "--output", str(tmp_path / "x")]) == 2


def test_verify_small_mc_budget_exits_two(tmp_path):
    assert run(["verify", "--suite", "classical", "--mc-samples", "10",
                "--output", str(tmp_path / "x")]) == 2


def test_empty_p_list_exits_two(tmp_path):
    assert run(["sweep", "--p", ",", "--output", str(tmp_path / "x")]) == 2


def test_verify_byte_identical_reports(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    args = ["verify", "--suite", "classical", "--dim", "2", "--p", "1,2",
            "--trials", "1", "--mc-samples", "5000", "--seed", "7"]
    assert run(args + ["--output", str(a)]) == 0
    assert run(args + ["--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_summary_csv(tmp_path):
    out = tmp_path / "r.jsonl"
    summary = tmp_path / "summary.csv"
    code = run(["verify", "--suite", "classical", "--dim", "2", "--p", "1",
                "--trials", "2", "--mc-samples", "5000", "--seed", "3",
                "--output", str(out), "--summary", str(summary)])
    assert code == 0
    header, *rows = summary.read_text().splitlines()
    assert header == "check_id,n,p,trials,pass,fail,inconclusive,min_ratio,max_ratio"
    assert rows
    for row in rows:
        fields = row.split(",")
        assert int(fields[3]) >= 1      # trials
        assert fields[4 + 1] == "0" or int(fields[5]) == 0  # no fails


def test_seed_env_override(tmp_path, monkeypatch):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    args = ["verify", "--suite", "classical", "--dim", "2", "--p", "1",
            "--trials", "1", "--mc-samples", "5000"]
    monkeypatch.setenv("POLARCALC_SEED", "99")
    assert run(args + ["--seed", "1", "--output", str(a)]) == 0
    monkeypatch.delenv("POLARCALC_SEED")
    assert run(args + ["--seed", "99", "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_sweep_rows_and_bounds(tmp_path):
    out = tmp_path / "sweep.tsv"
    code = run(["sweep", "--check", "rspolar", "--dim", "2",
                "--p", "1,2,inf", "--mc-samples", "20000", "--seed", "11",
                "--output", str(out)])
    assert code == 0
    header, *rows = out.read_text().splitlines()
    assert header.split("\t") == ["p", "n", "check_id", "min_ratio", "bound"]
    assert len(rows) == 3
    by_p = {row.split("\t")[0]: row.split("\t") for row in rows}
    assert float(by_p["1.0"][4]) == pytest.approx(1.0 / 6.0)
    assert by_p["inf"][4] == repr(1.0)
    # bound column is monotone in p and no observed ratio violates it
    bounds = [float(r.split("\t")[4]) for r in rows]
    assert bounds == sorted(bounds)
    for row in rows:
        assert float(row.split("\t")[3]) >= 1.0 - 1e-9


def test_sweep_symmetric_ratio_tracks_two_power(tmp_path):
    # symmetric L = K: lhs = 2^(-n) ... ratio = 2^-n / gamma_ratio at p=1
    out = tmp_path / "sweep.tsv"
    assert run(["sweep", "--check", "rspolar", "--dim", "2", "--p", "1",
                "--mc-samples", "20000", "--seed", "4",
                "--output", str(out)]) == 0
    row = out.read_text().splitlines()[1].split("\t")
    assert float(row[3]) == pytest.approx(0.25 * 6.0, rel=1e-9)


def test_show_roundtrip(tmp_path, capsys):
    out = tmp_path / "r.jsonl"
    run(["verify", "--suite", "classical", "--dim", "2", "--p", "1",
         "--trials", "1", "--mc-samples", "5000", "--seed", "2",
         "--output", str(out)])
    code = run(["show", str(out)])
    assert code == 0
    captured = capsys.readouterr().out
    assert "firey" in captured
    assert "fail=0" in captured
