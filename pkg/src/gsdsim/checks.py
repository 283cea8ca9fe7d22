"""Self-contained invariant suite behind the `gsdsim check` subcommand.

Every check returns (ok, detail) and uses fixed seeds, so the suite is
deterministic and needs no test framework.  The same properties are
exercised more aggressively in the test suite; this is the fast field
diagnostic.
"""

from __future__ import annotations

import io
import math
import random
import warnings as _warnings
from dataclasses import replace

from . import presets
from .engine import UnstableStep, run, write_csv
from .model import (GsdParams, GsdState, TerminalVoltages, conductance,
                    norm_constants, step, validate_params)
from .stimulus import Hold, PulseTrain, Scenario, TriangleSweep, Waveform

GC_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)


def _check_registry():
    rows = presets.list_presets()
    if len(rows) != 26:
        return False, f"expected 26 presets, found {len(rows)}"
    if rows[0][0] != "bao-2c":
        return False, f"first preset is {rows[0][0]!r}, expected 'bao-2c'"
    for pid, _ in rows:
        validate_params(presets.get(pid).params)
    return True, "26 presets, all rows valid"


def _check_blend_partition():
    rng = random.Random(11)
    worst = 0.0
    for g_c in [rng.random() for _ in range(2000)] + [0.0, 0.25, 0.5, 0.75, 1.0]:
        total = (max(1.0 - 2.0 * g_c, 0.0) + (-abs(2.0 * g_c - 1.0) + 1.0)
                 + max(2.0 * g_c - 1.0, 0.0))
        worst = max(worst, abs(total - 1.0))
    if worst > 4.0 * math.ulp(1.0):
        return False, f"blend weights off unity by {worst!r}"
    return True, f"weights sum to 1 within {worst!r}"


def _decade_pairs(count: int, seed: int):
    """Random (g_min, g_max) spanning 1e-13..1e-2 S, ratio at least one decade."""
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        g_min = 10.0 ** rng.uniform(-13.0, -3.0)
        ratio = 10.0 ** rng.uniform(1.0, min(9.0, -2.0 - math.log10(g_min)))
        pairs.append((g_min, g_min * ratio))
    return pairs


def _check_norm_identity():
    worst = 0.0
    for g_min, g_max in _decade_pairs(2000, seed=7):
        n = norm_constants(GsdParams(g_min=g_min, g_max=g_max))
        ulps = abs(n.s - n.p) / math.ulp(max(abs(n.s), abs(n.p)))
        worst = max(worst, ulps)
    if worst > 4.0:
        return False, f"s and p diverge by {worst:.2f} ulps"
    return True, f"s = p within {worst:.2f} ulps over 2000 pairs"


def _endpoint_bound(p: GsdParams) -> float:
    # both curve families stay within this much of g_max at x = 1
    return p.g_max * (1.0 - (p.g_max - p.g_min) / 1.0 - 2.0 * p.g_min / p.g_max)


def _check_endpoints():
    rows = [presets.get(pid).params for pid, _ in presets.list_presets()]
    rows += [replace(GsdParams(), g_c=g_c) for g_c in GC_GRID]
    for p in rows:
        n = norm_constants(p)
        g0 = conductance(0.0, p, n)
        if abs(g0 - p.g_min) > 1e-6 * p.g_min:
            return False, f"conductance(0) = {g0!r} != g_min {p.g_min!r} (g_c={p.g_c})"
        g1 = conductance(1.0, p, n)
        if not (_endpoint_bound(p) <= g1 <= p.g_max):
            return False, (f"conductance(1) = {g1!r} outside "
                           f"[{_endpoint_bound(p)!r}, {p.g_max!r}] (g_c={p.g_c})")
    return True, f"endpoints anchored for {len(rows)} parameter rows"


def _check_monotone():
    rows = [presets.get(pid).params for pid, _ in presets.list_presets()]
    rows += [replace(GsdParams(), g_c=g_c) for g_c in GC_GRID]
    xs = [k * 1e-3 for k in range(1001)]
    for p in rows:
        n = norm_constants(p)
        prev = conductance(xs[0], p, n)
        for x in xs[1:]:
            g = conductance(x, p, n)
            if not g > prev:
                return False, f"not strictly increasing at x={x!r} (g_c={p.g_c})"
            prev = g
    return True, f"strictly increasing on a 1e-3 grid for {len(rows)} rows"


def _check_current():
    from .model import channel_current
    g = 1e-6
    for b_rev in (0.0, 0.25, 0.5, 1.0):
        p = GsdParams(b_rev=b_rev)
        if channel_current(0.0, g, p) != 0.0:
            return False, f"nonzero current at dv=0, b_rev={b_rev}"
        # forward branch must not feel b_rev
        if channel_current(1.3, g, p) != g * 1.3:
            return False, f"forward branch depends on b_rev={b_rev}"
    p1 = GsdParams(b_rev=1.0)
    p0 = GsdParams(b_rev=0.0)
    for k in range(1, 200):
        dv = -2.0 * k / 199.0
        if channel_current(dv, g, p1) != g * dv:
            return False, f"b_rev=1 not ohmic at dv={dv!r}"
        want = g * math.expm1(dv)
        got = channel_current(dv, g, p0)
        if abs(got - want) > 1e-12 * abs(want):
            return False, f"b_rev=0 diode branch off at dv={dv!r}"
    return True, "ohmic/diode blend behaves at both extremes"


def _check_threshold_inert():
    p = replace(presets.get("bao-2c").params, r_stp=0.0, r_ltp=0.0, x_start=0.37)
    n = norm_constants(p)
    state = GsdState(x=p.x_start, x_min=0.0, t_last=0.0)
    for k in range(1, 2001):
        state = step(state, TerminalVoltages(v_gate=0.69), k * 1e-3, p, n).state
        if state.x != p.x_start or state.x_min != 0.0:
            return False, f"state drifted below threshold at step {k}"
    return True, "2000 sub-threshold steps leave x bit-identical"


def _check_set_time():
    s = Scenario(params=GsdParams(), gate=Waveform([Hold(1.0, 2e-6)]),
                 dt=1e-8, duration=2e-6)
    tr = run(s)
    hit = next((r.t for r in tr.records if r.x == 1.0), None)
    if hit is None or abs(hit - 1e-6) > 1.5e-8:
        return False, f"x reached 1.0 at t={hit!r}, expected t_set within one step"
    return True, f"x hits 1.0 at t={hit!r} for t_set=1e-6"


def _check_asymmetry():
    # x_scale = 2^-10 keeps every increment exactly representable
    dt = 2.0 ** -10
    for n_amp in (1.0, 40.0, 345.0):
        p = GsdParams(n_amp=n_amp, t_set=1.0)
        n = norm_constants(p)
        up = step(GsdState(0.5, 0.0, 0.0), TerminalVoltages(v_gate=1.0), dt, p, n)
        down = step(GsdState(0.5, 0.0, 0.0), TerminalVoltages(v_gate=-1.0), dt, p, n)
        if 0.5 - down.state.x != n_amp * (up.state.x - 0.5):
            return False, f"asymmetry gain not exact for n_amp={n_amp}"
    return True, "negative-drive gain exact for n_amp in {1, 40, 345}"


def _check_polarity_flip():
    for pid in ("burgt-1d", "burgt-2a", "burgt-2b", "burgt-2c", "burgt-3c"):
        s = presets.scenario(pid)
        mirrored = replace(s, params=replace(s.params, f=1.0),
                           gate=s.gate.scaled(-1.0))
        a = run(s)
        b = run(mirrored)
        for ra, rb in zip(a.records, b.records):
            if (ra.t, ra.x, ra.x_min, ra.v_eff, ra.g_syn, ra.i_syn) != \
               (rb.t, rb.x, rb.x_min, rb.v_eff, rb.g_syn, rb.i_syn):
                return False, f"{pid}: trajectories diverge at t={ra.t!r}"
    return True, "f=-1 runs equal f=+1 runs under mirrored gate drive"


def _check_ltp_proportionality():
    from .model import delta_x, delta_x_min
    rng = random.Random(23)
    for _ in range(500):
        p = GsdParams(q_ltp=rng.random(), t_c=rng.random(),
                      v_t=rng.uniform(0.0, 2.0), t_set=10.0 ** rng.uniform(-6, 3))
        v_eff = rng.uniform(-50.0, 50.0)
        dt = 10.0 ** rng.uniform(-9, 0)
        if delta_x_min(v_eff, dt, p) != p.q_ltp * delta_x(v_eff, dt, p):
            return False, f"floor increment not q_ltp-proportional at v_eff={v_eff!r}"
    return True, "floor increment is exactly q_ltp times the state increment"


def _check_decay():
    p = GsdParams(r_stp=2.0, t_set=1.0, x_start=0.8)
    horizon = 20.0 / (p.r_stp * p.t_set)
    s = Scenario(params=p, dt=0.25, duration=horizon)
    tr = run(s)
    xs = tr.column("x")
    for a, b in zip(xs, xs[1:]):
        if b > a:
            return False, "x increased while decaying"
        if b < 0.0:
            return False, "x undershot its floor"
    if abs(xs[-1]) >= 1e-6:
        return False, f"x(T) = {xs[-1]!r} has not converged"
    with _warnings.catch_warnings(record=True) as caught:
        _warnings.simplefilter("always")
        noisy = run(Scenario(params=p, dt=1.0, duration=5.0))
    if not noisy.warnings or not any(issubclass(w.category, UnstableStep) for w in caught):
        return False, "oversized dt did not raise the stability warning"
    return True, "monotone convergence to the floor; stability warning fires"


def _check_state_fuzz():
    rng = random.Random(41)
    ids = [pid for pid, _ in presets.list_presets()]
    for pid in rng.sample(ids, 8):
        p = presets.get(pid).params
        n = norm_constants(p)
        state = GsdState(x=p.x_start, x_min=0.0, t_last=0.0)
        dt = p.t_set / 50.0
        for k in range(1, 400):
            v = TerminalVoltages(rng.uniform(-3, 3), rng.uniform(-3, 3),
                                 rng.uniform(-6, 6))
            res = step(state, v, k * dt, p, n)
            state = res.state
            if not (0.0 <= state.x_min <= state.x <= 1.0):
                return False, f"{pid}: bounds violated at step {k}"
            if not (math.isfinite(res.g_syn) and math.isfinite(res.i_syn)):
                return False, f"{pid}: non-finite output at step {k}"
    return True, "random drive keeps 0 <= x_min <= x <= 1 and finite outputs"


def _check_pulse_count():
    for count, width, period in ((3, 1e-3, 2e-3), (7, 0.5, 2.0), (64, 0.005, 0.255)):
        wf = Waveform([PulseTrain(0.0, 1.0, width, period, count)])
        dt = width / 4.0
        n = int(wf.total_duration / dt) + 1
        vals = [wf.value(k * dt) for k in range(n)]
        edges = sum(1 for a, b in zip(vals, vals[1:]) if a == 0.0 and b == 1.0)
        if vals[0] == 1.0:
            edges += 1
        if edges != count:
            return False, f"{edges} pulses detected, expected {count}"
    return True, "pulse trains deliver exactly their declared count"


def _check_sweep_extrema():
    for start, peak, rate, cycles in ((0.0, 2.0, 0.5, 1), (0.0, -2.0, 16.0, 3),
                                      (-1.0, 1.0, 0.25, 2)):
        sw = TriangleSweep(start, peak, rate, cycles)
        half = abs(peak - start) / rate
        for c in range(cycles):
            if sw.value(c * 2.0 * half + half) != peak:
                return False, f"apex of cycle {c} missed peak {peak!r}"
            if sw.value(c * 2.0 * half) != start:
                return False, f"cycle {c} does not start at {start!r}"
        if sw.value(sw.duration) != start:
            return False, "sweep does not settle back at its start level"
    return True, "triangle sweeps hit start and peak exactly"


def _check_grid():
    s = Scenario(params=GsdParams(), gate=Waveform([Hold(0.5, 1e-5)]),
                 dt=1e-7, duration=1e-5)
    tr = run(s)
    want = math.floor(1e-5 / 1e-7) + 1
    if len(tr.records) != want:
        return False, f"{len(tr.records)} records, expected {want}"
    for k in (0, 1, 17, len(tr.records) - 1):
        if tr.records[k].t != k * 1e-7:
            return False, f"record {k} at t={tr.records[k].t!r}, expected {k * 1e-7!r}"
    return True, "t = k*dt exactly; count = floor(duration/dt) + 1"


def _check_preset_runs():
    for pid, _ in presets.list_presets():
        s = presets.scenario(pid)
        p = presets.get(pid).params
        tr = run(s)
        if tr.warnings:
            return False, f"{pid}: unexpected warnings {tr.warnings}"
        last_t = -1.0
        for r in tr.records:
            if not (0.0 <= r.x_min <= r.x <= 1.0):
                return False, f"{pid}: state bounds violated at t={r.t!r}"
            if not (p.g_min * (1.0 - 1e-6) <= r.g_syn <= p.g_max):
                return False, f"{pid}: conductance out of window at t={r.t!r}"
            if not all(map(math.isfinite, (r.v_eff, r.g_syn, r.i_syn))):
                return False, f"{pid}: non-finite record at t={r.t!r}"
            if not r.t > last_t:
                return False, f"{pid}: time not strictly increasing at t={r.t!r}"
            last_t = r.t
        again = run(s)
        if again.records != tr.records:
            return False, f"{pid}: repeat run is not bit-identical"
    return True, "all 26 preset scenarios run clean and deterministic"


def _check_csv_roundtrip():
    tr = run(presets.scenario("tang-14"))
    buf = io.StringIO()
    write_csv(tr, buf)
    text = buf.getvalue()
    if "\r" in text:
        return False, "CSV contains carriage returns"
    lines = text.splitlines()
    header_at = next(i for i, ln in enumerate(lines) if not ln.startswith("#"))
    if lines[header_at] != "t,v_in,v_out,v_gate,v_eff,x,x_min,g_syn,i_syn":
        return False, f"unexpected header {lines[header_at]!r}"
    body = lines[header_at + 1:]
    if len(body) != len(tr.records):
        return False, "row count does not match record count"
    for row, rec in zip(body, tr.records):
        vals = [float(tok) for tok in row.split(",")]
        orig = [rec.t, rec.v_in, rec.v_out, rec.v_gate, rec.v_eff, rec.x,
                rec.x_min, rec.g_syn, rec.i_syn]
        if vals != orig:
            return False, f"row at t={rec.t!r} does not round-trip"
    return True, "CSV floats round-trip bit-exact, LF line endings"


_CHECKS = [
    ("preset-registry", _check_registry),
    ("blend-partition", _check_blend_partition),
    ("norm-identity", _check_norm_identity),
    ("endpoint-normalization", _check_endpoints),
    ("monotone-conductance", _check_monotone),
    ("current-blend", _check_current),
    ("threshold-inertness", _check_threshold_inert),
    ("ideal-set-time", _check_set_time),
    ("asymmetry-gain", _check_asymmetry),
    ("polarity-flip", _check_polarity_flip),
    ("ltp-proportionality", _check_ltp_proportionality),
    ("decay-convergence", _check_decay),
    ("state-bounds-fuzz", _check_state_fuzz),
    ("pulse-count", _check_pulse_count),
    ("sweep-extrema", _check_sweep_extrema),
    ("time-grid", _check_grid),
    ("preset-scenarios", _check_preset_runs),
    ("csv-round-trip", _check_csv_roundtrip),
]


def run_all() -> list[tuple[str, bool, str]]:
    """Run every invariant check; (name, ok, detail) per check."""
    results = []
    for name, fn in _CHECKS:
        try:
            ok, detail = fn()
        except Exception as err:  # a crashed check is a failed check
            ok, detail = False, f"raised {type(err).__name__}: {err}"
        results.append((name, ok, detail))
    return results
