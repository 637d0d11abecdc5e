import json
import math

import pytest

from brjuno.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_eval_irrational(capsys):
    code, out = run(capsys, "eval", "B", "0.3819660112501051")
    rec = json.loads(out)
    assert code == 0
    assert rec["converged"] is True
    assert abs(rec["value"] - 1.4436349) < 1e-4
    assert rec["tail_bound"] >= 0.0


def test_eval_rational_exits_2(capsys):
    code, out = run(capsys, "eval", "B", "0.375")
    rec = json.loads(out)
    assert code == 2
    assert (rec["p"], rec["q"]) == (3, 8)


def test_eval_closed_forms(capsys):
    code, out = run(capsys, "eval", "phi", "0.1234567")
    assert code == 0
    assert json.loads(out)["converged"] is True
    code, out = run(capsys, "eval", "popcorn", "0.375")
    assert json.loads(out)["value"] == pytest.approx(0.125)


def test_eval_domain_error_exits_2(capsys):
    code, out = run(capsys, "eval", "phi", "0.75")
    assert code == 2
    assert "error" in json.loads(out)


def test_sample_csv_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "sample", "B", "--n", "40", "--seed", "5",
               "--out", str(a))[0] == 0
    assert run(capsys, "sample", "B", "--n", "40", "--seed", "5",
               "--threads", "3", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert lines[0] == "x,value,depth,tail_bound,converged,reason"
    assert len(lines) == 41


def test_sample_json_format(capsys):
    code, out = run(capsys, "sample", "W", "--n", "5", "--format", "json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 5
    assert all("x" in r and "value" in r for r in rows)


def test_jump_command(capsys):
    code, out = run(capsys, "jump", "1", "3")
    rec = json.loads(out)
    assert code == 0
    assert abs(rec["jump"] - 2 / 3) < 1e-3


def test_farey_command(capsys):
    code, out = run(capsys, "farey", "3", "8")
    rec = json.loads(out)
    assert code == 0
    assert (rec["p1"], rec["q1"], rec["p2"], rec["q2"]) == (1, 3, 2, 5)
    assert rec["depth"] == 2


def test_complex_command(capsys):
    code, out = run(capsys, "complex", "B", "0.618+0.1i", "--qmax", "50")
    rec = json.loads(out)
    assert code == 0
    assert rec["im"] > 0 and rec["terms_used"] > 100


def test_complex_lower_half_plane_exits_2(capsys):
    code, out = run(capsys, "complex", "W", "0.5-0.1i")
    assert code == 2


def test_complex_unparsable_exits_2(capsys):
    code, out = run(capsys, "complex", "B", "zzz")
    assert code == 2


def test_verify_jumps_exit_zero(capsys):
    code, out = run(capsys, "verify", "jumps", "--qmax", "4")
    rec = json.loads(out)
    assert code == 0
    assert rec["hard_failures"] == []


def test_verify_complex_identity(capsys):
    code, out = run(capsys, "verify", "complex_identity", "--qmax", "40")
    assert code == 0


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg"
    cfg.write_text("n = 7\nseed = 9\n")
    code, out = run(capsys, "sample", "B", "--config", str(cfg))
    assert code == 0
    assert len(out.splitlines()) == 8  # header + 7 rows from config
    code, out2 = run(capsys, "sample", "B", "--config", str(cfg), "--n", "3")
    assert len(out2.splitlines()) == 4  # the flag wins over the config


def test_unknown_config_key_exits_2(tmp_path, capsys):
    cfg = tmp_path / "cfg"
    cfg.write_text("bogus = 1\n")
    code, out = run(capsys, "sample", "B", "--config", str(cfg))
    assert code == 2
