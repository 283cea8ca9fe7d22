"""Fixed-step transient engine and trace serialization.

Explicit forward Euler on a uniform grid: record k sits at t = k*dt (formed
by multiplication, never accumulation), the first record is the pre-update
initial state, and the count is floor(duration/dt) + 1.  Runs are pure
functions of the scenario, so repeat runs are bit-identical.
"""

from __future__ import annotations

import json
import math
import warnings as _warnings
from dataclasses import dataclass, fields as dc_fields, replace

import numpy as np

from .model import (GsdParams, GsdState, TerminalVoltages, norm_constants,
                    step)
from .stimulus import Scenario, TriangleSweep, scenario_duration

CSV_HEADER = "t,v_in,v_out,v_gate,v_eff,x,x_min,g_syn,i_syn"


class MissingSweep(ValueError):
    """ivsweep() needs a TriangleSweep on the requested terminal."""


class UnstableStep(UserWarning):
    """dt exceeds the short-term decay stability bound; run proceeds."""


@dataclass(frozen=True, slots=True)
class TraceRecord:
    t: float       # s
    v_in: float    # V
    v_out: float   # V
    v_gate: float  # V
    v_eff: float   # V, post-amplification programming voltage
    x: float
    x_min: float
    g_syn: float   # S
    i_syn: float   # A


@dataclass(slots=True)
class Trace:
    label: str
    params: GsdParams
    dt: float
    duration: float
    records: list[TraceRecord]
    warnings: list[str]
    sweep: str | None = None        # terminal tag set by ivsweep
    dt_override: float | None = None

    def column(self, name: str) -> list[float]:
        """One named column of the trace as a list."""
        return [getattr(r, name) for r in self.records]


def run(s: Scenario, dt_override: float | None = None) -> Trace:
    """Simulate a scenario and return its trace.

    dt_override, when given, replaces the scenario's dt and is noted in the
    trace metadata.  A dt above 1/(r_stp*t_set) distorts the short-term
    decay; the run proceeds but carries an UnstableStep warning in the
    metadata so CSV consumers see it.
    """
    if dt_override is not None:
        s = replace(s, dt=dt_override)
    s.validate()
    p = s.params
    n = norm_constants(p)
    dt = s.dt
    span = scenario_duration(s)
    count = math.floor(span / dt) + 1

    times = [k * dt for k in range(count)]
    grid = np.asarray(times)
    v_in = s.inp.sample(grid).tolist()
    v_out = s.out.sample(grid).tolist()
    v_gate = s.gate.sample(grid).tolist()

    warn_lines: list[str] = []
    if p.r_stp > 0.0 and dt > 1.0 / (p.r_stp * p.t_set):
        msg = (f"dt {dt!r} s exceeds the short-term decay stability bound "
               f"{1.0 / (p.r_stp * p.t_set)!r} s")
        warn_lines.append(msg)
        _warnings.warn(msg, UnstableStep)

    state = GsdState(x=p.x_start, x_min=0.0, t_last=0.0)
    records: list[TraceRecord] = []
    for k in range(count):
        t = times[k]
        res = step(state, TerminalVoltages(v_in[k], v_out[k], v_gate[k]), t, p, n)
        state = res.state
        records.append(TraceRecord(t, v_in[k], v_out[k], v_gate[k], res.v_eff,
                                   state.x, state.x_min, res.g_syn, res.i_syn))
    return Trace(label=s.label, params=p, dt=dt, duration=span,
                 records=records, warnings=warn_lines, dt_override=dt_override)


def ivsweep(s: Scenario, terminal: str, dt_override: float | None = None) -> Trace:
    """Run a scenario whose input or gate carries a triangle sweep.

    The returned trace is tagged with the swept terminal so downstream
    plotting can pair current against the swept voltage.  Raises
    MissingSweep when that terminal has no TriangleSweep segment.
    """
    if terminal not in ("in", "gate"):
        raise ValueError(f"terminal must be 'in' or 'gate', got {terminal!r}")
    wf = s.inp if terminal == "in" else s.gate
    if not any(isinstance(seg, TriangleSweep) for seg in wf.segments):
        raise MissingSweep(f"no triangle sweep on the {terminal!r} terminal")
    trace = run(s, dt_override=dt_override)
    trace.sweep = terminal
    return trace


def write_csv(trace: Trace, dest) -> None:
    """Write a trace as CSV: '#' metadata lines, a header, then records.

    Floats are serialized with repr (shortest round-trip form), newlines
    are LF, so identical traces produce identical bytes.
    """
    if hasattr(dest, "write"):
        _write_csv(trace, dest)
    else:
        with open(dest, "w", encoding="utf-8", newline="") as fh:
            _write_csv(trace, fh)


def _write_csv(trace: Trace, fh) -> None:
    snapshot = {f.name: getattr(trace.params, f.name) for f in dc_fields(GsdParams)}
    fh.write(f"# label: {trace.label}\n")
    fh.write(f"# params: {json.dumps(snapshot)}\n")
    fh.write(f"# dt: {trace.dt!r}\n")
    fh.write(f"# duration: {trace.duration!r}\n")
    if trace.sweep is not None:
        fh.write(f"# sweep: {trace.sweep}\n")
    if trace.dt_override is not None:
        fh.write(f"# dt_override: {trace.dt_override!r}\n")
    for msg in trace.warnings:
        fh.write(f"# warning: {msg}\n")
    fh.write(CSV_HEADER + "\n")
    for r in trace.records:
        fh.write(f"{r.t!r},{r.v_in!r},{r.v_out!r},{r.v_gate!r},{r.v_eff!r},"
                 f"{r.x!r},{r.x_min!r},{r.g_syn!r},{r.i_syn!r}\n")
