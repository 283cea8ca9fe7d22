"""Command-line contract: subcommands, exit codes, env override, round-trip."""

import os
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "gsdsim.cli"]


def gsdsim(*args, env_extra=None, cwd=None):
    env = dict(os.environ)
    env.pop("GSDSIM_DT", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(CLI + list(args), capture_output=True, text=True,
                          env=env, cwd=cwd)


def test_run_preset_writes_csv(tmp_path):
    out = tmp_path / "bao.csv"
    res = gsdsim("run", "--preset", "bao-2c", "--out", str(out))
    assert res.returncode == 0
    assert res.stdout == ""  # trace goes to the file, not the pipe
    lines = out.read_text().splitlines()
    header = next(ln for ln in lines if not ln.startswith("#"))
    assert header == "t,v_in,v_out,v_gate,v_eff,x,x_min,g_syn,i_syn"


def test_run_unknown_preset_exits_2(tmp_path):
    res = gsdsim("run", "--preset", "boa-2c", "--out", str(tmp_path / "x.csv"))
    assert res.returncode == 2
    assert "bao-2c" in res.stderr  # nearest-match suggestion


def test_run_bad_scenario_exits_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"label": "x", "dt": 0.1, "duration": 1.0, "bogus": 1}')
    res = gsdsim("run", "--scenario", str(bad), "--out", str(tmp_path / "x.csv"))
    assert res.returncode == 2
    assert "bogus" in res.stderr


def test_run_missing_scenario_file_exits_2(tmp_path):
    res = gsdsim("run", "--scenario", str(tmp_path / "none.json"),
                 "--out", str(tmp_path / "x.csv"))
    assert res.returncode == 2


def test_run_unwritable_out_exits_3(tmp_path):
    res = gsdsim("run", "--preset", "tang-14",
                 "--out", str(tmp_path / "no" / "dir" / "x.csv"))
    assert res.returncode == 3


def test_dt_flag_beats_env(tmp_path):
    out = tmp_path / "t.csv"
    res = gsdsim("run", "--preset", "tang-14", "--dt", "0.04",
                 "--out", str(out), env_extra={"GSDSIM_DT": "0.01"})
    assert res.returncode == 0
    text = out.read_text()
    assert "# dt: 0.04" in text
    assert "# dt_override: 0.04" in text


def test_env_dt_applies_without_flag(tmp_path):
    out = tmp_path / "t.csv"
    res = gsdsim("run", "--preset", "tang-14", "--out", str(out),
                 env_extra={"GSDSIM_DT": "0.05"})
    assert res.returncode == 0
    assert "# dt_override: 0.05" in out.read_text()


def test_env_dt_rejects_garbage(tmp_path):
    res = gsdsim("run", "--preset", "tang-14", "--out", str(tmp_path / "t.csv"),
                 env_extra={"GSDSIM_DT": "fast"})
    assert res.returncode == 2
    assert "GSDSIM_DT" in res.stderr


def test_list_prints_26_presets():
    res = gsdsim("list")
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert len(lines) == 26
    assert lines[0].startswith("bao-2c")


@pytest.mark.parametrize("preset", ["lim-2a", "tang-15", "bao-2c"])
def test_export_then_run_matches_preset_run(tmp_path, preset):
    exported = tmp_path / "s.json"
    assert gsdsim("export", "--preset", preset, "--out", str(exported)).returncode == 0
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert gsdsim("run", "--scenario", str(exported), "--out", str(a)).returncode == 0
    assert gsdsim("run", "--preset", preset, "--out", str(b)).returncode == 0
    assert a.read_bytes() == b.read_bytes()  # metadata too, not just records


def test_export_unknown_preset_exits_2(tmp_path):
    res = gsdsim("export", "--preset", "nope", "--out", str(tmp_path / "x.json"))
    assert res.returncode == 2


def test_check_passes_and_prints_table():
    res = gsdsim("check")
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert len(lines) >= 15
    assert all("  ok  " in ln for ln in lines)
    assert not any("FAIL" in ln for ln in lines)


@pytest.mark.parametrize("preset", ["herrmann-2a", "bao-3a"])
def test_plot_written(tmp_path, preset):
    out, fig = tmp_path / "t.csv", tmp_path / "t.png"
    res = gsdsim("run", "--preset", preset, "--out", str(out),
                 "--plot", str(fig))
    assert res.returncode == 0
    assert fig.stat().st_size > 0
