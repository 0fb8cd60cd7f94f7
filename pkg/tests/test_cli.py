import io
import json
import subprocess
import sys

import pytest

from bqkz import cli
from bqkz import qkzsolver as qs

from conftest import solution


def run(*argv):
    buf = io.StringIO()
    code = cli.run(list(argv), stdout=buf)
    return code, buf.getvalue()


def test_sumrule_homogeneous_line():
    code, out = run("sumrule", "--k", "3", "--n", "2", "--homogeneous")
    assert code == 0
    assert "I(1,...,1|r) = 20 + 84 r + 84 r^2 + 20 r^3" in out.splitlines()


def test_numbers_csv_table():
    code, out = run("numbers", "--which", "vsasm", "--k-max", "5", "--n-max", "5",
                    "--output", "csv")
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()]
    assert rows[0] == ["n\\k", "1", "2", "3", "4", "5"]
    assert rows[2] == ["2", "1", "3", "13", "68", "399"]
    assert rows[5][5] == "9080679253196247653297250"


def test_verify_three_two_exits_zero():
    code, out = run("verify", "--k", "3", "--n", "2", "--output", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["tool"] == "qkz" and doc["version"]
    assert doc["config"]["k"] == 3
    assert all(set(c) == {"name", "mode", "status", "witness"} for c in doc["report"]["checks"])


def test_unsupported_exit_three(capsys):
    code, _ = run("repr", "--k", "3", "--n", "3")
    assert code == 3
    assert "min(k, n) <= 2" in capsys.readouterr().err


def test_usage_errors():
    assert run("verify", "--checks", "bogus")[0] == 2
    assert run("paths", "--k", "0")[0] == 2
    assert run("sumrule", "--r", "abc")[0] == 2
    assert run("numbers", "--which", "xyz")[0] == 2
    assert run("nonsense")[0] == 2
    assert run("paths", "--k", "5", "--n", "5")[0] == 2  # size cap


def test_failing_check_exits_one(monkeypatch):
    sol = solution(2, 2)
    p = sol.basis.paths[1]
    bad = sol.with_component(p, sol[p] + 1)
    monkeypatch.setattr(cli, "load_or_solve", lambda cfg, notes=None: bad)
    assert run("verify", "--k", "2", "--n", "2", "--checks", "exchange")[0] == 1


def test_subcommands_run():
    for argv in (["paths", "--k", "3", "--n", "2"], ["repr", "--k", "2", "--n", "3"],
                 ["solve", "--k", "2", "--n", "2"], ["stationary", "--k", "3", "--n", "2"],
                 ["conjecture", "--k-list", "2,3"],
                 ["rational-limit", "--k", "2", "--n", "3"],
                 ["rational-limit", "--k", "2", "--n", "2", "--modular"],
                 ["sumrule", "--k", "2", "--n", "2", "--check", "--r", "1/2"]):
        code, out = run(*argv)
        assert code == 0, argv
        assert out.strip()


def test_stationary_text():
    _, out = run("stationary", "--k", "3", "--n", "2")
    assert out.splitlines()[0] == "123123: 5/13"


# -- cache -----------------------------------------------------------------------------

def test_cache_roundtrip_and_hit(tmp_path):
    cfg = cli.RunConfig("solve", 2, 2, cache_dir=str(tmp_path))
    first = cli.load_or_solve(cfg)
    notes = []
    again = cli.load_or_solve(cfg, notes)
    assert notes == ["cache hit"] and again == first
    assert cli.cache_path(tmp_path, 2, 2).exists()


def test_env_overrides_cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("QKZ_CACHE_DIR", str(tmp_path / "env"))
    assert cli.default_cache_dir() == tmp_path / "env"


def test_corrupt_cache_falls_back(tmp_path):
    cfg = cli.RunConfig("solve", 2, 2, cache_dir=str(tmp_path))
    cli.load_or_solve(cfg)
    path = cli.cache_path(tmp_path, 2, 2)
    doc = json.loads(path.read_text())
    first = next(iter(doc["components"]))
    doc["components"][first]["terms"][0]["c"] = "12345"
    path.write_text(json.dumps(doc))
    with pytest.raises(cli.CorruptCache):
        cli.deserialize_solution(path.read_text())
    notes = []
    sol = cli.load_or_solve(cfg, notes)
    assert "CorruptCache" in notes[0] and sol == solution(2, 2)
    path.write_text("{not json")
    with pytest.raises(cli.CorruptCache):
        cli.deserialize_solution(path.read_text())


def test_format_version_mismatch(tmp_path):
    text = cli.serialize_solution(solution(2, 2))
    doc = json.loads(text)
    doc["format_version"] = cli.FORMAT_VERSION + 1
    with pytest.raises(cli.FormatVersionMismatch):
        cli.deserialize_solution(json.dumps(doc))
    cfg = cli.RunConfig("solve", 2, 2, cache_dir=str(tmp_path))
    cli.cache_path(tmp_path, 2, 2).write_text(json.dumps(doc))
    notes = []
    assert cli.load_or_solve(cfg, notes) == solution(2, 2)
    assert "FormatVersionMismatch" in notes[0]


def test_no_cache_flag(tmp_path):
    code, _ = run("solve", "--k", "2", "--n", "2", "--no-cache", "--cache-dir", str(tmp_path))
    assert code == 0 and not any(tmp_path.iterdir())


def test_roundtrip_preserves_solution():
    sol = solution(3, 2)
    assert cli.cache_roundtrip(sol) == sol


# -- determinism --------------------------------------------------------------------------

def test_reports_are_byte_identical():
    argv = ["verify", "--k", "2", "--n", "3", "--output", "json", "--seed", "7"]
    a = run(*argv)[1]
    b = run(*argv)[1]
    assert a == b


def test_parallel_report_matches_serial():
    base = ["verify", "--k", "2", "--n", "2", "--output", "json"]
    serial = json.loads(run(*base)[1])
    par = json.loads(run(*base, "--jobs", "2")[1])
    assert serial["report"] == par["report"]


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "bqkz.cli", "paths", "--k", "2", "--n", "2"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "1122 rank 1" in out.stdout
