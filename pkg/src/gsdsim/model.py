"""Core device model for three-terminal gated synaptic devices.

A device is described by a unitless internal state ``x`` in [0, 1] that sets
the channel conductance, plus a long-term floor ``x_min`` that the short-term
component decays back to.  Gate (and optionally channel) voltage programs the
state once the effective programming voltage clears a threshold; two decay
terms model short- and long-term plasticity loss.

All math is double precision, conductances in siemens, times in seconds,
voltages in volts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

X_MAX = 1.0  # upper bound of the state variable


class RangeViolation(ValueError):
    """A parameter sits outside its allowed range."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class DegenerateConductance(ValueError):
    """g_min >= g_max leaves the conductance law without a usable window."""


class SigmoidUndefined(ValueError):
    """g_max - g_min >= 1 S makes the sigmoid slope constant undefined."""


class NonMonotonicTime(ValueError):
    """step() was asked to move backwards in time."""


@dataclass(frozen=True, slots=True)
class GsdParams:
    """Device parameter set.

    Defaults give an idealized device: linear-window conductance bounds of
    10 pS..1 uS, a 1 us full set time, no threshold, no decay.
    """

    g_c: float = 0.0      # conductance-curve shape blend, 0 concave .. 1 sigmoid
    b_rev: float = 1.0    # reverse-bias blend, 1 ohmic .. 0 rectifying
    g_min: float = 1e-11  # S, conductance floor
    g_max: float = 1e-6   # S, conductance ceiling (asymptote)
    t_set: float = 1e-6   # s, time to program x across [0, 1] at 1 V drive
    v_t: float = 0.0      # V, programming threshold (strict)
    n_amp: float = 1.0    # gain applied to negative effective voltage
    o_c: float = 0.0      # channel-voltage coupling into the programming voltage
    t_c: float = 0.0      # fraction of v_t subtracted from the drive overhead
    r_stp: float = 0.0    # 1/(V s^2) short-term decay rate factor
    q_ltp: float = 0.0    # fraction of each programming step written to x_min
    r_ltp: float = 0.0    # 1/(V s^2) long-term decay rate factor
    f: float = 1.0        # gate polarity, +1 or -1
    x_start: float = 0.0  # initial state

    def __post_init__(self):
        # normalize ints to floats so serialized snapshots are stable
        for name in self.__dataclass_fields__:
            object.__setattr__(self, name, float(getattr(self, name)))


def validate_params(p: GsdParams) -> GsdParams:
    """Check every field against its allowed range and return ``p``.

    Raises RangeViolation for an out-of-range field, DegenerateConductance
    when g_min >= g_max, SigmoidUndefined when g_max - g_min >= 1 S.
    """
    unit_fields = ("g_c", "b_rev", "o_c", "t_c", "q_ltp", "x_start")
    for name in unit_fields:
        v = getattr(p, name)
        if not (math.isfinite(v) and 0.0 <= v <= 1.0):
            raise RangeViolation(name, f"must be in [0, 1], got {v!r}")
    if not (math.isfinite(p.g_min) and p.g_min > 0.0):
        raise RangeViolation("g_min", f"must be finite and > 0 S, got {p.g_min!r}")
    if not math.isfinite(p.g_max):
        raise RangeViolation("g_max", f"must be finite, got {p.g_max!r}")
    if not (math.isfinite(p.t_set) and p.t_set > 0.0):
        raise RangeViolation("t_set", f"must be > 0 s, got {p.t_set!r}")
    if not (math.isfinite(p.v_t) and p.v_t >= 0.0):
        raise RangeViolation("v_t", f"must be >= 0 V, got {p.v_t!r}")
    if not (math.isfinite(p.n_amp) and p.n_amp > 0.0):
        raise RangeViolation("n_amp", f"must be > 0, got {p.n_amp!r}")
    if not (math.isfinite(p.r_stp) and p.r_stp >= 0.0):
        raise RangeViolation("r_stp", f"must be >= 0, got {p.r_stp!r}")
    if not (math.isfinite(p.r_ltp) and p.r_ltp >= 0.0):
        raise RangeViolation("r_ltp", f"must be >= 0, got {p.r_ltp!r}")
    if p.f not in (1.0, -1.0):
        raise RangeViolation("f", f"must be +1 or -1, got {p.f!r}")
    if p.g_min >= p.g_max:
        raise DegenerateConductance(
            f"g_min ({p.g_min!r} S) must be below g_max ({p.g_max!r} S)"
        )
    if p.g_max - p.g_min >= 1.0:
        raise SigmoidUndefined(
            f"g_max - g_min = {p.g_max - p.g_min!r} S must stay below 1 S"
        )
    return p


@dataclass(frozen=True, slots=True)
class NormConstants:
    """Shape constants derived from (g_min, g_max).

    s anchors the sigmoid so it starts at g_min, m sets its slope, p sets
    the inverse-exponential rate; s and p are the same number by identity.
    g_range is the conductance window g_max - g_min.
    """

    s: float
    m: float
    p: float
    g_range: float


def norm_constants(p: GsdParams) -> NormConstants:
    """Derive the conductance-curve constants for a validated parameter set."""
    g_range = p.g_max - p.g_min
    s = math.log(p.g_max / p.g_min - 1.0)
    m = math.log(1.0 / g_range - 1.0) + s
    rate = -math.log(p.g_min / g_range)
    return NormConstants(s=s, m=m, p=rate, g_range=g_range)


@dataclass(frozen=True, slots=True)
class GsdState:
    """Mutable-by-replacement device state between steps."""

    x: float = 0.0       # short-term state in [x_min, 1]
    x_min: float = 0.0   # long-term floor in [0, 1]
    t_last: float = 0.0  # s, time of the previous step


@dataclass(frozen=True, slots=True)
class TerminalVoltages:
    """Voltages applied to the three terminals at one instant."""

    v_in: float = 0.0
    v_out: float = 0.0
    v_gate: float = 0.0


def _sign(v: float) -> float:
    # sign(0) = 0 so a zero drive never picks up a threshold correction
    if v > 0.0:
        return 1.0
    if v < 0.0:
        return -1.0
    return 0.0


def effective_voltage(v: TerminalVoltages, p: GsdParams) -> float:
    """Programming voltage seen by the state: f*v_gate - o_c*(v_in - v_out)."""
    return p.f * v.v_gate - p.o_c * (v.v_in - v.v_out)


def amplify_negative(v_eff: float, p: GsdParams) -> float:
    """Scale a negative, above-threshold drive by n_amp; leave the rest alone."""
    if v_eff < 0.0 and -v_eff > p.v_t:
        return p.n_amp * v_eff
    return v_eff


def delta_x(v_eff: float, dt: float, p: GsdParams) -> float:
    """State increment for one step.

    ``v_eff`` must already be amplified; callers gate this on |v_eff| > v_t.
    """
    x_scale = dt / p.t_set
    return x_scale * (v_eff - _sign(v_eff) * p.t_c * p.v_t)


def delta_x_min(v_eff: float, dt: float, p: GsdParams) -> float:
    """Long-term floor increment: the q_ltp fraction of the state increment."""
    return p.q_ltp * delta_x(v_eff, dt, p)


def decay_stp(x: float, x_min: float, dt: float, p: GsdParams) -> float:
    """Short-term decay amount pulling x toward x_min over dt."""
    return p.r_stp * p.t_set * (x - x_min) * dt


def decay_ltp(dt: float, p: GsdParams) -> float:
    """Long-term decay amount pulling x_min toward 0 over dt."""
    return p.r_ltp * p.t_set * dt


def conductance(x: float, p: GsdParams, n: NormConstants) -> float:
    """Channel conductance for state x.

    Three shapes blended by g_c: a saturating inverse exponential (g_c=0),
    a straight line (g_c=0.5), a sigmoid (g_c=1).  Every shape starts at
    g_min for x=0; the blend weights always sum to one.
    """
    w_exp = max(1.0 - 2.0 * p.g_c, 0.0)
    w_lin = -abs(2.0 * p.g_c - 1.0) + 1.0
    w_sig = max(2.0 * p.g_c - 1.0, 0.0)
    g_exp = n.g_range * (1.0 - math.exp(-n.p * x)) + p.g_min
    g_lin = n.g_range * x + p.g_min
    g_sig = p.g_max / (1.0 + math.exp(-n.m * x + n.s))
    return w_exp * g_exp + w_lin * g_lin + w_sig * g_sig


def channel_current(dv: float, g_syn: float, p: GsdParams) -> float:
    """Channel current for a channel voltage dv = v_in - v_out.

    Forward bias is ohmic.  Reverse bias blends ohmic and exponential-diode
    branches with b_rev (1 fully ohmic, 0 fully rectifying).
    """
    if dv >= 0.0:
        return g_syn * dv
    return p.b_rev * g_syn * dv + (1.0 - p.b_rev) * g_syn * math.expm1(dv)


@dataclass(frozen=True, slots=True)
class StepResult:
    """Outputs of one transient step."""

    state: GsdState
    v_eff: float   # V, post-amplification programming voltage
    g_syn: float   # S
    i_syn: float   # A


def step(state: GsdState, v: TerminalVoltages, t_now: float, p: GsdParams,
         n: NormConstants) -> StepResult:
    """Advance the device from state.t_last to t_now under voltages v.

    Order per step: programming update (threshold-gated, negative drive
    amplified once, shared by x and x_min), then short-term decay, then
    long-term decay, then clamp x_min to [0, 1] and x to [x_min, 1], then
    the output quantities.  Overshoot past a clamp is discarded.
    """
    dt = t_now - state.t_last
    if dt < 0.0:
        raise NonMonotonicTime(f"t_now {t_now!r} precedes t_last {state.t_last!r}")

    x = state.x
    x_min = state.x_min
    dv = v.v_in - v.v_out
    v_eff = p.f * v.v_gate - p.o_c * dv

    if abs(v_eff) > p.v_t:
        if v_eff < 0.0:
            v_eff = p.n_amp * v_eff
        x_scale = dt / p.t_set
        drive = v_eff - _sign(v_eff) * p.t_c * p.v_t
        x += x_scale * drive
        x_min += p.q_ltp * x_scale * drive

    if x > x_min:
        x -= p.r_stp * p.t_set * (x - x_min) * dt
    if x_min > 0.0:
        x_min -= p.r_ltp * p.t_set * dt

    x_min = min(max(x_min, 0.0), X_MAX)
    x = min(max(x, x_min), X_MAX)

    g_syn = conductance(x, p, n)
    i_syn = channel_current(dv, g_syn, p)
    return StepResult(GsdState(x, x_min, t_now), v_eff, g_syn, i_syn)
