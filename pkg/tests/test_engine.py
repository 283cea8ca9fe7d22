"""Transient engine: grid layout, determinism, warnings, CSV contract."""

import io
import math
import warnings
from dataclasses import replace

import pytest

from gsdsim.engine import (CSV_HEADER, MissingSweep, UnstableStep, ivsweep,
                           run, write_csv)
from gsdsim.model import GsdParams, conductance, norm_constants
from gsdsim.presets import scenario as preset_scenario
from gsdsim.stimulus import Hold, Scenario, TriangleSweep, Waveform


def _grounded(dt=1e-7, duration=1e-5, **params):
    return Scenario(params=GsdParams(**params), dt=dt, duration=duration)


def test_grounded_run_is_quiescent():
    tr = run(_grounded())
    assert len(tr.records) == math.floor(1e-5 / 1e-7) + 1
    for r in tr.records:
        assert r.x == 0.0 and r.x_min == 0.0
        assert r.i_syn == 0.0
        assert r.g_syn == pytest.approx(1e-11, rel=1e-12)


def test_time_grid_by_multiplication():
    tr = run(_grounded(dt=0.1, duration=1e4))
    # k*dt, not accumulation: spot-check exact products deep into the run
    for k in (0, 1, 7, 99999, 100000):
        assert tr.records[k].t == k * 0.1


def test_first_record_is_pre_update():
    s = Scenario(params=GsdParams(x_start=0.3, t_set=1e-3),
                 gate=Waveform([Hold(1.0, 1.0)]), dt=0.1, duration=1.0)
    tr = run(s)
    p = s.params
    assert tr.records[0].t == 0.0
    assert tr.records[0].x == 0.3  # configured start state, before any update
    assert tr.records[0].g_syn == conductance(0.3, p, norm_constants(p))
    assert tr.records[1].x == 1.0  # one 0.1 s step at 1 V slams past x_max


def test_ideal_ramp_closed_form():
    s = Scenario(params=GsdParams(t_set=1e-6),
                 gate=Waveform([Hold(1.0, 2e-6)]),
                 inp=Waveform([Hold(0.1, 2e-6)]),
                 dt=1e-8, duration=2e-6)
    tr = run(s)
    for k, r in enumerate(tr.records):
        want = min(k * 1e-8 / 1e-6, 1.0)
        assert r.x == pytest.approx(want, abs=1e-12)
    at_set = tr.records[101]  # within one step of t_set
    assert at_set.x == 1.0
    assert at_set.g_syn == pytest.approx(1e-6, rel=2e-5)
    assert at_set.i_syn == pytest.approx(at_set.g_syn * 0.1, rel=1e-12)


def test_run_is_deterministic():
    s = preset_scenario("bao-2c")
    a, b = run(s), run(s)
    assert a.records == b.records
    buf_a, buf_b = io.StringIO(), io.StringIO()
    write_csv(a, buf_a)
    write_csv(b, buf_b)
    assert buf_a.getvalue() == buf_b.getvalue()


def test_dt_override_recorded():
    s = preset_scenario("tang-14")
    tr = run(s, dt_override=0.04)
    assert tr.dt == 0.04 and tr.dt_override == 0.04
    assert run(s).dt_override is None


def test_unstable_step_warns_and_proceeds():
    s = _grounded(dt=1.0, duration=5.0, r_stp=2.0, t_set=1.0, x_start=0.9)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        tr = run(s)
    assert any(issubclass(w.category, UnstableStep) for w in caught)
    assert tr.warnings and "dt" in tr.warnings[0]
    assert len(tr.records) == 6  # simulation still completes


def test_five_amplitude_family_ordered():
    # gate pulse at growing amplitude: traces rise then decay, ordered
    base = preset_scenario("bao-2c")
    finals, peaks = [], []
    for amp in (1.0, 1.5, 2.0, 2.5, 3.0):
        s = replace(base, gate=Waveform([Hold(0.0, 1.0), Hold(amp, 0.1),
                                         Hold(0.0, 1.9)]))
        g = run(s).column("g_syn")
        peak = max(g)
        assert g[-1] < peak  # decays after the pulse ends
        peaks.append(peak)
        finals.append(g[-1])
    assert peaks == sorted(peaks)
    assert all(b >= a for a, b in zip(finals, finals[1:]))


def test_ivsweep_requires_sweep_segment():
    s = _grounded()
    with pytest.raises(MissingSweep):
        ivsweep(s, "in")
    with pytest.raises(ValueError):
        ivsweep(s, "drain")


def test_ivsweep_tags_trace():
    s = Scenario(params=GsdParams(b_rev=0.0),
                 inp=Waveform([TriangleSweep(0.0, -2.0, 1.0, 1)]),
                 dt=0.01, duration=4.0)
    tr = ivsweep(s, "in")
    assert tr.sweep == "in"
    assert run(s).records == tr.records  # tagging does not change physics
    # diode-shaped reverse branch: current at -2 V well below linear
    i_min = min(tr.column("i_syn"))
    assert i_min == pytest.approx(1e-11 * math.expm1(-2.0), rel=1e-9)


def test_csv_format_contract():
    tr = run(preset_scenario("tang-14"), dt_override=0.04)
    buf = io.StringIO()
    write_csv(tr, buf)
    text = buf.getvalue()
    lines = text.split("\n")
    assert text.endswith("\n") and "\r" not in text
    meta = [ln for ln in lines if ln.startswith("#")]
    assert any(ln.startswith("# label: tang-14") for ln in meta)
    assert any(ln.startswith("# params: ") for ln in meta)
    assert any(ln == "# dt_override: 0.04" for ln in meta)
    header_at = lines.index(CSV_HEADER)
    rows = [ln for ln in lines[header_at + 1:] if ln]
    assert len(rows) == len(tr.records)
    # shortest round-trip serialization: parse back bit-equal
    for row, rec in zip(rows, tr.records):
        got = [float(tok) for tok in row.split(",")]
        assert got == [rec.t, rec.v_in, rec.v_out, rec.v_gate, rec.v_eff,
                       rec.x, rec.x_min, rec.g_syn, rec.i_syn]


def test_write_csv_to_path(tmp_path):
    dest = tmp_path / "out.csv"
    tr = run(_grounded(dt=1e-6, duration=1e-5))
    write_csv(tr, dest)
    raw = dest.read_bytes()
    assert b"\r" not in raw
    assert raw.decode().count("\n") == len(tr.records) + raw.decode().count("#") + 1


def test_invalid_scenario_rejected_at_run():
    from gsdsim.stimulus import InvalidScenario
    with pytest.raises(InvalidScenario):
        run(_grounded(dt=1e-7, duration=1e-5), dt_override=-1.0)
