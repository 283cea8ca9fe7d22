"""Piecewise terminal waveforms and the scenario container.

A waveform is an ordered list of segments laid end to end, right-continuous
at every boundary.  Past its last segment a waveform holds its final value;
a terminal with no waveform sits at 0 V.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_right
from dataclasses import dataclass, field, fields as dc_fields

import numpy as np

from .model import GsdParams, validate_params


class InvalidScenario(ValueError):
    """Scenario or waveform fails its preconditions or schema."""


@dataclass(frozen=True, slots=True)
class Hold:
    level: float
    duration: float

    def _check(self) -> None:
        if not (math.isfinite(self.duration) and self.duration > 0.0):
            raise InvalidScenario(f"hold duration must be > 0 s, got {self.duration!r}")

    def value(self, tau: float) -> float:
        return self.level

    def sample(self, tau: np.ndarray) -> np.ndarray:
        return np.full(tau.shape, self.level)


@dataclass(frozen=True, slots=True)
class Ramp:
    start: float  # serialized as "from"
    end: float    # serialized as "to"
    duration: float

    def _check(self) -> None:
        if not (math.isfinite(self.duration) and self.duration > 0.0):
            raise InvalidScenario(f"ramp duration must be > 0 s, got {self.duration!r}")

    def value(self, tau: float) -> float:
        if tau >= self.duration:
            return self.end
        return self.start + (self.end - self.start) * (tau / self.duration)

    def sample(self, tau: np.ndarray) -> np.ndarray:
        frac = np.clip(tau / self.duration, 0.0, 1.0)
        return self.start + (self.end - self.start) * frac


@dataclass(frozen=True, slots=True)
class PulseTrain:
    """count pulses of level base+amplitude, width wide, one every period."""

    base: float
    amplitude: float
    width: float
    period: float
    count: int

    def _check(self) -> None:
        if not (math.isfinite(self.width) and self.width > 0.0):
            raise InvalidScenario(f"pulse width must be > 0 s, got {self.width!r}")
        if not (math.isfinite(self.period) and self.period >= self.width):
            raise InvalidScenario(
                f"pulse period must be >= width, got period {self.period!r} width {self.width!r}"
            )
        if not (isinstance(self.count, int) and self.count >= 1):
            raise InvalidScenario(f"pulse count must be an integer >= 1, got {self.count!r}")

    @property
    def duration(self) -> float:
        return self.count * self.period

    def value(self, tau: float) -> float:
        k = math.floor(tau / self.period)
        if k >= self.count:
            return self.base
        if tau - k * self.period < self.width:
            return self.base + self.amplitude
        return self.base

    def sample(self, tau: np.ndarray) -> np.ndarray:
        k = np.floor(tau / self.period)
        on = (k < self.count) & (tau - k * self.period < self.width)
        return np.where(on, self.base + self.amplitude, self.base)


@dataclass(frozen=True, slots=True)
class TriangleSweep:
    """Linear sweep start -> peak -> start at |rate| V/s, repeated cycles times."""

    start: float  # serialized as "from"
    peak: float
    rate: float
    cycles: int

    def _check(self) -> None:
        if not (math.isfinite(self.rate) and self.rate > 0.0):
            raise InvalidScenario(f"sweep rate must be > 0 V/s, got {self.rate!r}")
        if self.peak == self.start:
            raise InvalidScenario("sweep peak must differ from its start level")
        if not (isinstance(self.cycles, int) and self.cycles >= 1):
            raise InvalidScenario(f"sweep cycles must be an integer >= 1, got {self.cycles!r}")

    @property
    def _half(self) -> float:
        return abs(self.peak - self.start) / self.rate

    @property
    def duration(self) -> float:
        return self.cycles * 2.0 * self._half

    def value(self, tau: float) -> float:
        half = self._half
        c = math.floor(tau / (2.0 * half))
        if c >= self.cycles:
            return self.start
        tau_c = tau - c * (2.0 * half)
        # interpolate in fractional phase so the apex lands on peak exactly
        if tau_c < half:
            return self.start + (self.peak - self.start) * (tau_c / half)
        return self.peak + (self.start - self.peak) * ((tau_c - half) / half)

    def sample(self, tau: np.ndarray) -> np.ndarray:
        half = self._half
        c = np.floor(tau / (2.0 * half))
        tau_c = tau - c * (2.0 * half)
        up = self.start + (self.peak - self.start) * (tau_c / half)
        down = self.peak + (self.start - self.peak) * ((tau_c - half) / half)
        v = np.where(tau_c < half, up, down)
        return np.where(c >= self.cycles, self.start, v)


Segment = Hold | Ramp | PulseTrain | TriangleSweep


@dataclass(frozen=True, slots=True)
class Waveform:
    segments: tuple[Segment, ...] = ()

    def __init__(self, segments=()):
        object.__setattr__(self, "segments", tuple(segments))

    def validate(self) -> None:
        for seg in self.segments:
            seg._check()

    @property
    def total_duration(self) -> float:
        return sum(seg.duration for seg in self.segments)

    def _starts(self) -> list[float]:
        starts, t = [], 0.0
        for seg in self.segments:
            starts.append(t)
            t += seg.duration
        return starts

    def value(self, t: float) -> float:
        """Voltage at time t >= 0; 0 V when empty, final value past the end."""
        if not self.segments:
            return 0.0
        starts = self._starts()
        i = bisect_right(starts, t) - 1
        seg = self.segments[i]
        return seg.value(min(t - starts[i], seg.duration))

    def sample(self, times: np.ndarray) -> np.ndarray:
        """Vectorized value() over an ascending time grid."""
        if not self.segments:
            return np.zeros(times.shape)
        starts = self._starts()
        idx = np.searchsorted(starts, times, side="right") - 1
        out = np.empty(times.shape)
        for i, seg in enumerate(self.segments):
            sel = idx == i
            if not sel.any():
                continue
            tau = np.minimum(times[sel] - starts[i], seg.duration)
            out[sel] = seg.sample(tau)
        return out

    def scaled(self, factor: float) -> "Waveform":
        """Same timing, every voltage level multiplied by factor."""
        scaled = []
        for seg in self.segments:
            if isinstance(seg, Hold):
                scaled.append(Hold(seg.level * factor, seg.duration))
            elif isinstance(seg, Ramp):
                scaled.append(Ramp(seg.start * factor, seg.end * factor, seg.duration))
            elif isinstance(seg, PulseTrain):
                scaled.append(PulseTrain(seg.base * factor, seg.amplitude * factor,
                                         seg.width, seg.period, seg.count))
            else:
                scaled.append(TriangleSweep(seg.start * factor, seg.peak * factor,
                                            seg.rate, seg.cycles))
        return Waveform(scaled)


@dataclass(frozen=True, slots=True)
class Scenario:
    """One complete experiment: device parameters, drive, and time grid."""

    params: GsdParams = field(default_factory=GsdParams)
    gate: Waveform = field(default_factory=Waveform)
    inp: Waveform = field(default_factory=Waveform)   # serialized as "in"
    out: Waveform = field(default_factory=Waveform)
    dt: float = 1e-9
    duration: float = 0.0
    label: str = ""

    def validate(self) -> None:
        try:
            validate_params(self.params)
        except ValueError as err:
            raise InvalidScenario(f"params: {err}") from err
        if not (math.isfinite(self.dt) and self.dt > 0.0):
            raise InvalidScenario(f"dt must be > 0 s, got {self.dt!r}")
        if not (math.isfinite(self.duration) and self.duration >= 0.0):
            raise InvalidScenario(f"duration must be >= 0 s, got {self.duration!r}")
        for wf in (self.gate, self.inp, self.out):
            wf.validate()
        if scenario_duration(self) < self.dt:
            raise InvalidScenario("scenario is shorter than one time step")


def scenario_duration(s: Scenario) -> float:
    """Simulated span: the declared duration or the longest waveform."""
    return max(s.duration, s.gate.total_duration, s.inp.total_duration,
               s.out.total_duration)


# --- JSON scenario files ----------------------------------------------------
#
# {"label": ..., "dt": ..., "duration": ...,
#  "params": {...Table-style device fields...},
#  "gate"|"in"|"out": [{"type": "hold", "level": ..., "duration": ...}, ...]}
#
# Unknown keys anywhere are an error so a typo cannot silently become a
# default.  Omitted params fall back to their defaults; an omitted terminal
# is grounded.

_SEGMENT_TYPES = {
    "hold": (Hold, {"level": "level", "duration": "duration"}),
    "ramp": (Ramp, {"from": "start", "to": "end", "duration": "duration"}),
    "pulse_train": (PulseTrain, {"base": "base", "amplitude": "amplitude",
                                 "width": "width", "period": "period",
                                 "count": "count"}),
    "triangle_sweep": (TriangleSweep, {"from": "start", "peak": "peak",
                                       "rate": "rate", "cycles": "cycles"}),
}
_PARAM_NAMES = tuple(f.name for f in dc_fields(GsdParams))
_TOP_KEYS = ("label", "dt", "duration", "params", "gate", "in", "out")
_INT_FIELDS = ("count", "cycles")


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidScenario(f"{where}: expected a number, got {value!r}")
    return float(value)


def _segment_from_dict(obj, where: str) -> Segment:
    if not isinstance(obj, dict):
        raise InvalidScenario(f"{where}: expected a segment object, got {obj!r}")
    kind = obj.get("type")
    if kind not in _SEGMENT_TYPES:
        raise InvalidScenario(
            f"{where}: unknown segment type {kind!r}; "
            f"expected one of {sorted(_SEGMENT_TYPES)}"
        )
    cls, keymap = _SEGMENT_TYPES[kind]
    unknown = set(obj) - set(keymap) - {"type"}
    if unknown:
        raise InvalidScenario(f"{where}: unknown keys {sorted(unknown)} for {kind!r}")
    missing = set(keymap) - set(obj)
    if missing:
        raise InvalidScenario(f"{where}: missing keys {sorted(missing)} for {kind!r}")
    kwargs = {}
    for json_key, attr in keymap.items():
        v = obj[json_key]
        if attr in _INT_FIELDS:
            n = _number(v, f"{where}.{json_key}")
            if n != int(n):
                raise InvalidScenario(f"{where}.{json_key}: expected an integer, got {v!r}")
            kwargs[attr] = int(n)
        else:
            kwargs[attr] = _number(v, f"{where}.{json_key}")
    return cls(**kwargs)


def _segment_to_dict(seg: Segment) -> dict:
    for kind, (cls, keymap) in _SEGMENT_TYPES.items():
        if isinstance(seg, cls):
            d = {"type": kind}
            for json_key, attr in keymap.items():
                d[json_key] = getattr(seg, attr)
            return d
    raise TypeError(f"not a segment: {seg!r}")


def scenario_from_dict(doc) -> Scenario:
    if not isinstance(doc, dict):
        raise InvalidScenario(f"expected a scenario object, got {doc!r}")
    unknown = set(doc) - set(_TOP_KEYS)
    if unknown:
        raise InvalidScenario(f"unknown top-level keys {sorted(unknown)}")
    for key in ("dt", "duration"):
        if key not in doc:
            raise InvalidScenario(f"missing required key {key!r}")

    raw_params = doc.get("params", {})
    if not isinstance(raw_params, dict):
        raise InvalidScenario(f"params: expected an object, got {raw_params!r}")
    unknown = set(raw_params) - set(_PARAM_NAMES)
    if unknown:
        raise InvalidScenario(
            f"params: unknown parameter names {sorted(unknown)}; "
            f"expected from {list(_PARAM_NAMES)}"
        )
    params = GsdParams(**{k: _number(v, f"params.{k}") for k, v in raw_params.items()})

    waveforms = {}
    for key in ("gate", "in", "out"):
        segs = doc.get(key, [])
        if not isinstance(segs, list):
            raise InvalidScenario(f"{key}: expected a list of segments, got {segs!r}")
        waveforms[key] = Waveform(
            _segment_from_dict(obj, f"{key}[{i}]") for i, obj in enumerate(segs)
        )

    label = doc.get("label", "")
    if not isinstance(label, str):
        raise InvalidScenario(f"label: expected a string, got {label!r}")

    s = Scenario(params=params, gate=waveforms["gate"], inp=waveforms["in"],
                 out=waveforms["out"], dt=_number(doc["dt"], "dt"),
                 duration=_number(doc["duration"], "duration"), label=label)
    s.validate()
    return s


def scenario_to_dict(s: Scenario) -> dict:
    return {
        "label": s.label,
        "dt": s.dt,
        "duration": s.duration,
        "params": {name: getattr(s.params, name) for name in _PARAM_NAMES},
        "gate": [_segment_to_dict(seg) for seg in s.gate.segments],
        "in": [_segment_to_dict(seg) for seg in s.inp.segments],
        "out": [_segment_to_dict(seg) for seg in s.out.segments],
    }


def load_scenario(path) -> Scenario:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as err:
            raise InvalidScenario(f"{path}: not valid JSON ({err})") from err
    return scenario_from_dict(doc)


def save_scenario(s: Scenario, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(scenario_to_dict(s), fh, indent=2)
        fh.write("\n")
