"""Waveform evaluation, scenario composition, and the JSON schema."""

import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gsdsim.model import GsdParams
from gsdsim.stimulus import (Hold, InvalidScenario, PulseTrain, Ramp,
                             Scenario, TriangleSweep, Waveform, load_scenario,
                             save_scenario, scenario_duration,
                             scenario_from_dict, scenario_to_dict)


# ------------------------------------------------------------------ segments

def test_hold_value():
    assert Hold(0.5, 1.0).value(0.3) == 0.5
    assert Hold(0.5, 1.0).value(0.0) == 0.5


def test_ramp_interpolates():
    r = Ramp(0.0, 2.0, 4.0)
    assert r.value(1.0) == 0.5
    assert r.value(0.0) == 0.0
    assert r.value(4.0) == 2.0


def test_pulse_train_values():
    pt = PulseTrain(0.0, 1.0, 1e-3, 2e-3, 3)
    assert pt.value(2.5e-3) == 1.0  # inside the second pulse
    assert pt.value(1.5e-3) == 0.0  # gap after the first
    assert pt.value(0.0) == 1.0     # leading edge is post-edge valued
    assert pt.duration == pytest.approx(6e-3)


def test_pulse_train_count_by_edge_detection():
    for count, width, period in ((1, 1e-3, 1e-3), (3, 1e-3, 2e-3),
                                 (11, 0.2, 0.7), (64, 0.005, 0.255)):
        wf = Waveform([PulseTrain(0.0, 2.0, width, period, count)])
        dt = width / 4.0
        n = math.floor(wf.total_duration / dt) + 1
        vals = [wf.value(k * dt) for k in range(n)]
        edges = sum(1 for a, b in zip(vals, vals[1:]) if a == 0.0 and b == 2.0)
        if vals[0] == 2.0:
            edges += 1
        assert edges == count


def test_triangle_sweep_extrema_exact():
    sw = TriangleSweep(0.0, 2.0, 0.5, 2)
    half = 4.0
    for c in range(2):
        assert sw.value(2.0 * half * c) == 0.0
        assert sw.value(2.0 * half * c + half) == 2.0
    assert sw.value(sw.duration) == 0.0
    down = TriangleSweep(0.0, -2.0, 16.0, 1)
    assert down.value(0.125) == -2.0


def test_triangle_sweep_piecewise_linear():
    sw = TriangleSweep(-1.0, 1.0, 0.25, 1)
    assert sw.value(4.0) == 0.0   # halfway up
    assert sw.value(12.0) == 0.0  # halfway down
    vals = [sw.value(k * 0.5) for k in range(33)]
    assert max(vals) == 1.0 and min(vals) == -1.0


@pytest.mark.parametrize("seg", [
    Hold(1.0, 0.0), Hold(1.0, -2.0),
    Ramp(0.0, 1.0, 0.0),
    PulseTrain(0.0, 1.0, 2e-3, 1e-3, 3),   # width > period
    PulseTrain(0.0, 1.0, 1e-3, 2e-3, 0),
    TriangleSweep(0.0, 1.0, 0.0, 1),
    TriangleSweep(0.0, 0.0, 1.0, 1),       # flat sweep
    TriangleSweep(0.0, 1.0, 1.0, 0),
])
def test_bad_segments_rejected(seg):
    with pytest.raises(InvalidScenario):
        Waveform([seg]).validate()


# ----------------------------------------------------------------- waveforms

def test_waveform_concatenation():
    a, b, c = Hold(1.0, 1.0), Ramp(1.0, 0.0, 2.0), Hold(0.5, 1.0)
    whole = Waveform([a, b, c])
    parts = Waveform([a, b])
    for t in [0.0, 0.5, 1.0, 1.5, 2.9, 2.9999]:
        assert whole.value(t) == parts.value(t)
    assert whole.value(3.5) == 0.5


def test_waveform_right_continuous_at_boundaries():
    wf = Waveform([Hold(0.0, 1.0), Hold(5.0, 1.0)])
    assert wf.value(1.0) == 5.0


def test_waveform_holds_final_value():
    wf = Waveform([Hold(0.0, 1.0), Ramp(0.0, 2.0, 1.0)])
    assert wf.value(2.0) == 2.0
    assert wf.value(100.0) == 2.0


def test_empty_waveform_grounded():
    wf = Waveform()
    assert wf.total_duration == 0.0
    assert wf.value(0.0) == 0.0
    assert wf.value(42.0) == 0.0


def test_waveform_scaled():
    wf = Waveform([Hold(1.0, 1.0), Ramp(1.0, -2.0, 1.0)]).scaled(-1.0)
    assert wf.value(0.5) == -1.0
    assert wf.value(2.0) == 2.0


@given(st.lists(st.floats(min_value=0.0, max_value=3.0), min_size=1,
                max_size=20))
def test_waveform_sample_matches_value(times):
    wf = Waveform([Hold(1.0, 0.4), Ramp(1.0, -1.0, 1.0),
                   PulseTrain(0.0, 2.0, 0.1, 0.3, 3),
                   TriangleSweep(0.0, 1.0, 2.0, 1)])
    import numpy as np
    sampled = wf.sample(np.asarray(times))
    for t, s in zip(times, sampled):
        assert s == wf.value(t)


# ----------------------------------------------------------------- scenarios

def test_scenario_duration_envelope():
    one = Waveform([Hold(1.0, 1.0)])
    s = Scenario(params=GsdParams(), gate=one, inp=one, out=one,
                 dt=0.1, duration=2.0)
    assert scenario_duration(s) == 2.0
    s2 = Scenario(params=GsdParams(), gate=Waveform([Hold(1.0, 1.0)]),
                  dt=0.1, duration=0.5)
    assert scenario_duration(s2) == 1.0
    s3 = Scenario(params=GsdParams(), dt=0.1, duration=0.5)
    assert scenario_duration(s3) == 0.5  # all terminals grounded


def test_scenario_validation():
    with pytest.raises(InvalidScenario):
        Scenario(params=GsdParams(), dt=0.0, duration=1.0).validate()
    with pytest.raises(InvalidScenario):
        Scenario(params=GsdParams(), dt=-0.1, duration=1.0).validate()
    with pytest.raises(InvalidScenario):
        # duration below one step
        Scenario(params=GsdParams(), dt=1.0, duration=0.5).validate()
    with pytest.raises(InvalidScenario):
        Scenario(params=GsdParams(g_c=3.0), dt=0.1, duration=1.0).validate()


# ---------------------------------------------------------------------- JSON

GOOD_DOC = {
    "label": "unit",
    "dt": 0.01,
    "duration": 2.0,
    "params": {"g_max": 2e-6, "v_t": 0.5},
    "gate": [{"type": "hold", "level": 1.0, "duration": 1.0},
             {"type": "ramp", "from": 1.0, "to": 0.0, "duration": 1.0}],
    "in": [{"type": "pulse_train", "base": 0.0, "amplitude": 0.1,
            "width": 0.01, "period": 0.02, "count": 5}],
    "out": [{"type": "triangle_sweep", "from": 0.0, "peak": -1.0,
             "rate": 2.0, "cycles": 1}],
}


def test_scenario_from_dict():
    s = scenario_from_dict(GOOD_DOC)
    assert s.label == "unit"
    assert s.params.g_max == 2e-6 and s.params.v_t == 0.5
    assert s.params.g_min == 1e-11  # omitted params keep their defaults
    assert s.gate.value(1.5) == 0.5
    assert s.inp.value(0.025) == 0.1
    assert s.out.value(0.25) == -0.5


def test_scenario_round_trip(tmp_path):
    s = scenario_from_dict(GOOD_DOC)
    path = tmp_path / "unit.json"
    save_scenario(s, path)
    text = path.read_text()
    assert text.endswith("\n")
    again = load_scenario(path)
    assert scenario_to_dict(again) == scenario_to_dict(s)
    doc = json.loads(text)
    assert set(doc["params"]) == {
        "g_c", "b_rev", "g_min", "g_max", "t_set", "v_t", "n_amp", "o_c",
        "t_c", "r_stp", "q_ltp", "r_ltp", "f", "x_start"}


@pytest.mark.parametrize("mutate", [
    lambda d: d.update(extra=1),
    lambda d: d["params"].update(gmin=1e-9),            # typo'd field
    lambda d: d["gate"][0].update(amplitude=2.0),       # field of another type
    lambda d: d["gate"][0].update(type="sine"),
    lambda d: d["gate"][0].pop("level"),
    lambda d: d["in"][0].update(count=2.5),             # fractional count
    lambda d: d["out"][0].update(cycles="two"),
    lambda d: d.pop("dt"),
])
def test_scenario_dict_rejects_malformed(mutate):
    doc = json.loads(json.dumps(GOOD_DOC))
    mutate(doc)
    with pytest.raises(InvalidScenario):
        scenario_from_dict(doc)


def test_load_scenario_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(InvalidScenario):
        load_scenario(path)
