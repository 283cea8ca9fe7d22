"""Bundled device presets.

Each preset carries the published parameter row for a device experiment and
a scripted scenario approximating that experiment.  Preset ids are
"<author>-<figure>" after the source paper's figure the experiment came
from.  Where the sources leave stimulus details unstated (pulse amplitudes,
sweep rates, observation windows), the scripted values are assumptions and
are spelled out in the provenance string.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass
from typing import Callable

from .model import GsdParams
from .stimulus import Hold, PulseTrain, Scenario, TriangleSweep, Waveform, save_scenario

READ_BIAS = 0.1  # V on the input terminal wherever the source reads current continuously


class UnknownPreset(LookupError):
    """Preset id is not in the registry; carries a nearest-match hint."""

    def __init__(self, preset_id: str, suggestion: str | None):
        hint = f"; closest match is {suggestion!r}" if suggestion else ""
        super().__init__(f"unknown preset {preset_id!r}{hint}")
        self.preset_id = preset_id
        self.suggestion = suggestion


@dataclass(frozen=True)
class Preset:
    id: str
    params: GsdParams
    provenance: str


def _hold_gate(params: GsdParams, label: str, gate_segments, dt: float,
               duration: float, read: float = READ_BIAS) -> Scenario:
    return Scenario(params=params, gate=Waveform(gate_segments),
                    inp=Waveform([Hold(read, duration)]), dt=dt,
                    duration=duration, label=label)


def _bao_2c(p: GsdParams) -> Scenario:
    # 100 ms gate bias at t = 1 s; the source family spans several amplitudes
    return _hold_gate(p, "bao-2c", [Hold(0.0, 1.0), Hold(3.0, 0.1), Hold(0.0, 1.9)],
                      dt=0.005, duration=3.0)


def _bao_3a(p: GsdParams) -> Scenario:
    return _hold_gate(p, "bao-3a", [Hold(2.0, 60.0), Hold(0.0, 30.0)],
                      dt=0.05, duration=90.0)


def _bao_3b(p: GsdParams) -> Scenario:
    return _hold_gate(p, "bao-3b", [Hold(2.0, 60.0), Hold(0.0, 30.0)],
                      dt=0.05, duration=90.0)


def _bao_3d(p: GsdParams) -> Scenario:
    segs = [Hold(3.0, 150.0), Hold(-3.0, 150.0)] * 3
    return _hold_gate(p, "bao-3d", segs, dt=0.25, duration=900.0)


def _burgt_1d(p: GsdParams) -> Scenario:
    # four potentiating pulses walk x through five levels, four depress back
    segs = [PulseTrain(0.0, -1.0, 0.5, 1.0, 4), PulseTrain(0.0, 1.0, 0.5, 1.0, 4),
            Hold(0.0, 1.0)]
    return _hold_gate(p, "burgt-1d", segs, dt=0.01, duration=9.0)


def _burgt_2a(p: GsdParams) -> Scenario:
    segs = [Hold(-0.5, 1.6), Hold(0.5, 1.6)] * 2
    return _hold_gate(p, "burgt-2a", segs, dt=0.005, duration=6.4)


def _burgt_2b(p: GsdParams) -> Scenario:
    segs = [Hold(-1.0, 25.0), Hold(1.0, 25.0), Hold(-1.0, 25.0)]
    return _hold_gate(p, "burgt-2b", segs, dt=0.05, duration=75.0)


def _burgt_2c(p: GsdParams) -> Scenario:
    return _hold_gate(p, "burgt-2c", [Hold(-1.0, 1.5), Hold(0.0, 8.5)],
                      dt=0.005, duration=10.0)


def _burgt_3c(p: GsdParams) -> Scenario:
    segs = [Hold(-0.5, 1.0), Hold(0.5, 1.0)] * 10
    return _hold_gate(p, "burgt-3c", segs, dt=0.005, duration=20.0)


def _herrmann_2a(p: GsdParams) -> Scenario:
    return _hold_gate(p, "herrmann-2a", [TriangleSweep(0.0, 2.0, 0.1, 1)],
                      dt=0.05, duration=40.0)


def _herrmann_2b(p: GsdParams) -> Scenario:
    gate = Waveform([Hold(1.5, 2000.0), Hold(0.0, 20.0)])
    inp = Waveform([Hold(0.0, 2000.0), TriangleSweep(0.0, 1.0, 0.1, 1)])
    return Scenario(params=p, gate=gate, inp=inp, dt=0.25, duration=2020.0,
                    label="herrmann-2b")


def _herrmann_3(p: GsdParams) -> Scenario:
    return _hold_gate(p, "herrmann-3", [Hold(1.5, 60.0), Hold(0.0, 120.0)],
                      dt=0.1, duration=180.0)


def _herrmann_4a(p: GsdParams) -> Scenario:
    return _hold_gate(p, "herrmann-4a", [Hold(2.0, 120.0)], dt=0.05, duration=120.0)


def _lim_2a(p: GsdParams) -> Scenario:
    # 64 programming pulses, a reverse-bias input sweep after each one
    gate_segs, in_segs = [], []
    for _ in range(64):
        gate_segs += [Hold(0.0155, 0.005), Hold(0.0, 0.25)]
        in_segs += [Hold(0.0, 0.005), TriangleSweep(0.0, -2.0, 16.0, 1)]
    return Scenario(params=p, gate=Waveform(gate_segs), inp=Waveform(in_segs),
                    dt=0.00125, duration=64 * 0.255, label="lim-2a")


def _lim_pulse_cycles(p: GsdParams, label: str, cycles: int) -> Scenario:
    segs = []
    for _ in range(cycles):
        segs += [PulseTrain(0.0, 1.0, 1e-4, 2e-4, 55),
                 PulseTrain(0.0, -1.0, 1e-4, 2e-4, 2)]
    duration = cycles * 57 * 2e-4
    return _hold_gate(p, label, segs, dt=2.5e-5, duration=duration)


def _lim_2b(p: GsdParams) -> Scenario:
    return _lim_pulse_cycles(p, "lim-2b", 3)


def _lim_5(p: GsdParams) -> Scenario:
    return _lim_pulse_cycles(p, "lim-5", 1)


def _murdoch_4c(p: GsdParams) -> Scenario:
    return _hold_gate(p, "murdoch-4c", [Hold(5.0, 2.0), Hold(0.0, 8.0)],
                      dt=0.01, duration=10.0)


def _murdoch_4d(p: GsdParams) -> Scenario:
    gate = Waveform([Hold(5.0, 2.0), Hold(0.0, 14.0), Hold(5.0, 2.0), Hold(0.0, 18.0)])
    out = Waveform([Hold(0.0, 14.0), Hold(-3.0, 0.1), Hold(0.0, 15.9),
                    Hold(-3.0, 0.1), Hold(0.0, 5.9)])
    return Scenario(params=p, gate=gate, inp=Waveform([Hold(READ_BIAS, 36.0)]),
                    out=out, dt=0.01, duration=36.0, label="murdoch-4d")


def _murdoch_5a(p: GsdParams) -> Scenario:
    return _hold_gate(p, "murdoch-5a", [Hold(5.0, 2.0), Hold(0.0, 18.0)],
                      dt=0.01, duration=20.0)


def _tan_1c(p: GsdParams) -> Scenario:
    return _hold_gate(p, "tan-1c", [Hold(5.0, 300.0)], dt=0.5, duration=300.0)


def _tan_1d(p: GsdParams) -> Scenario:
    inp = Waveform([TriangleSweep(0.0, 1.2, 0.6, 1), Hold(0.0, 10.0),
                    TriangleSweep(0.0, 1.2, 0.6, 1)])
    gate = Waveform([Hold(0.0, 4.0), Hold(5.0, 10.0), Hold(0.0, 4.0)])
    return Scenario(params=p, gate=gate, inp=inp, dt=0.01, duration=18.0,
                    label="tan-1d")


def _tan_1e(p: GsdParams) -> Scenario:
    gate_segs, in_segs = [], []
    for _ in range(4):
        gate_segs += [Hold(5.0, 38.0), Hold(0.0, 2.0)]
        in_segs += [Hold(0.0, 38.0), Hold(3.0, 2.0)]
    return Scenario(params=p, gate=Waveform(gate_segs), inp=Waveform(in_segs),
                    dt=0.05, duration=160.0, label="tan-1e")


def _tang_2(p: GsdParams) -> Scenario:
    return _hold_gate(p, "tang-2", [Hold(1.0, 1175.0), Hold(-1.0, 1175.0)],
                      dt=2.5, duration=2350.0)


def _tang_9(p: GsdParams) -> Scenario:
    segs = [Hold(1.0, 50.0), Hold(-1.0, 50.0)] * 2
    return _hold_gate(p, "tang-9", segs, dt=0.1, duration=200.0)


def _tang_14(p: GsdParams) -> Scenario:
    return _hold_gate(p, "tang-14", [Hold(1.0, 10.0), Hold(-1.0, 10.0)],
                      dt=0.02, duration=20.0)


def _tang_15(p: GsdParams) -> Scenario:
    return _hold_gate(p, "tang-15", [PulseTrain(0.0, 1.0, 1.0, 2.0, 150)],
                      dt=0.25, duration=300.0)


def _row(g_c, v_t, b_rev, g_min, g_max, t_set, r_stp, n_amp, o_c, t_c,
         q_ltp, r_ltp, f, x_start) -> GsdParams:
    return GsdParams(g_c=g_c, b_rev=b_rev, g_min=g_min, g_max=g_max,
                     t_set=t_set, v_t=v_t, n_amp=n_amp, o_c=o_c, t_c=t_c,
                     r_stp=r_stp, q_ltp=q_ltp, r_ltp=r_ltp, f=f, x_start=x_start)


_TABLE: list[tuple[str, GsdParams, str, Callable[[GsdParams], Scenario]]] = [
    ("bao-2c",
     _row(0.40, 0.700, 1.0, 3.000e-11, 2.10e-6, 1800, 3.5e-3, 1.0, 0.0, 1.0, 0.040, 7.0e-9, 1.0, 0.0),
     "Bao et al., dual-gated MoS2 synaptic transistor, their Fig. 2c: gate bias "
     "applied for 100 ms at t = 1 s; the source sweeps several amplitudes, "
     "scripted here at 3 V with a 0.1 V read bias.",
     _bao_2c),
    ("bao-3a",
     _row(0.40, 0.700, 1.0, 9.000e-10, 2.60e-6, 100, 3.5e-3, 1.0, 0.0, 1.0, 2.5e-3, 7.0e-8, 1.0, 0.0),
     "Bao et al., their Fig. 3a: potentiate/decay transient; scripted as a 2 V "
     "gate hold for 60 s then 30 s of decay, 0.1 V read bias.",
     _bao_3a),
    ("bao-3b",
     _row(0.40, 0.700, 1.0, 7.000e-10, 2.60e-6, 100, 3.5e-3, 1.0, 0.0, 1.0, 2.5e-3, 7.0e-8, 1.0, 0.0),
     "Bao et al., their Fig. 3b: same drive as bao-3a against a lower "
     "conductance floor.",
     _bao_3b),
    ("bao-3d",
     _row(0.40, 0.700, 1.0, 3.000e-11, 1.00e-7, 4600, 2.0e-6, 1.0, 0.0, 1.0, 2.5e-3, 7.0e-8, 1.0, 0.0),
     "Bao et al., their Fig. 3d: three consecutive near-linear potentiation/"
     "depression curves; scripted as +/-3 V gate holds, 150 s per half cycle.",
     _bao_3d),
    ("burgt-1d",
     _row(0.00, 0.000, 1.0, 5.750e-4, 1.35e-3, 4, 2.0e-3, 1.0, 0.0, 0.0, 0.400, 1.0e-6, -1.0, 0.2),
     "van de Burgt et al., organic electrochemical transistor, their Fig. 1d: "
     "stepping between five conductance levels from a half-set start; "
     "scripted as four -1 V then four +1 V gate pulses (0.5 s wide, 1 s "
     "apart; gate polarity is inverted for this device).",
     _burgt_1d),
    ("burgt-2a",
     _row(0.00, 0.000, 1.0, 5.250e-4, 1.60e-3, 1, 2.0e-3, 1.0, 0.0, 0.0, 0.400, 1.0e-6, -1.0, 0.0),
     "van de Burgt et al., their Fig. 2a: two consecutive potentiation/"
     "depression curves; scripted as -/+0.5 V gate holds, 1.6 s per half.",
     _burgt_2a),
    ("burgt-2b",
     _row(0.60, 0.000, 1.0, 7.500e-4, 3.00e-3, 33, 1.0e-4, 1.0, 0.0, 0.0, 0.400, 1.0e-6, -1.0, 0.0),
     "van de Burgt et al., their Fig. 2b: 1.5 potentiation/depression cycles; "
     "the current-programmed source experiment maps to a sigmoidal blend "
     "(g_c above one half); scripted as -/+1 V holds, 25 s per half.",
     _burgt_2b),
    ("burgt-2c",
     _row(0.00, 0.000, 1.0, 5.250e-4, 1.60e-3, 1, 3.0e-2, 1.0, 0.0, 0.0, 0.100, 1.0e-7, -1.0, 0.0),
     "van de Burgt et al., their Fig. 2c inset: potentiate then free decay; "
     "scripted as a -1 V, 1.5 s gate hold followed by 8.5 s unbiased.",
     _burgt_2c),
    ("burgt-3c",
     _row(0.00, 0.000, 1.0, 1.725e-3, 7.00e-3, 1, 1.0e-2, 1.0, 0.0, 0.0, 0.400, 1.0e-6, -1.0, 0.0),
     "van de Burgt et al., their Fig. 3c: ten consecutive potentiation/"
     "depression curves; scripted as -/+0.5 V holds, 1 s per half.",
     _burgt_3c),
    ("herrmann-2a",
     _row(0.45, 0.788, 1.0, 6.000e-12, 6.00e-9, 90, 2.0e-2, 1.0, 0.0, 1.0, 0.010, 7.0e-8, 1.0, 0.0),
     "Herrmann et al., SrTiO3-channel gated RRAM, their Fig. 2a: gate voltage "
     "swept at two velocities in the source; scripted as one 0 to 2 V "
     "triangle at 0.1 V/s with a 0.1 V read bias (rerun at other rates for "
     "the velocity family).",
     _herrmann_2a),
    ("herrmann-2b",
     _row(0.45, 0.788, 1.0, 6.000e-12, 6.00e-9, 90, 2.0e-2, 1.0, 0.0, 1.0, 0.010, 1.0e-8, 1.0, 0.0),
     "Herrmann et al., their Fig. 2b: input swept after 2000 s of gate "
     "pre-programming; the source uses six gate levels, scripted here at "
     "1.5 V with a 0 to 1 V input triangle at 0.1 V/s afterwards.",
     _herrmann_2b),
    ("herrmann-3",
     _row(0.45, 0.788, 1.0, 6.000e-12, 6.00e-9, 90, 1.0e-3, 1.0, 0.0, 1.0, 0.010, 1.7e-6, 1.0, 0.0),
     "Herrmann et al., their Fig. 3: potentiate/decay transient; scripted as "
     "a 1.5 V gate hold for 60 s then 120 s of decay.",
     _herrmann_3),
    ("herrmann-4a",
     _row(0.45, 0.788, 1.0, 6.000e-12, 6.00e-9, 90, 2.0e-2, 1.0, 0.0, 1.0, 0.010, 1.7e-6, 1.0, 0.0),
     "Herrmann et al., their Fig. 4a: potentiation over time at five constant "
     "gate voltages in the source; scripted at 2 V for 120 s.",
     _herrmann_4a),
    ("lim-2a",
     _row(0.45, 0.000, 0.0, 1.000e-12, 2.00e-9, 5.5e-3, 1.0e-1, 40.0, 0.0, 0.0, 0.000, 0.0, 1.0, 0.0),
     "Lim et al., CMOS gated-diode synapse, their Fig. 2a: reverse-bias input "
     "sweep between 64 gate programming pulses; scripted as 15.5 mV, 5 ms "
     "pulses each followed by a 0 to -2 V triangle at 16 V/s.",
     _lim_2a),
    ("lim-2b",
     _row(0.45, 0.000, 0.0, 1.000e-12, 2.00e-9, 5.5e-3, 1.0e-1, 40.0, 0.0, 0.0, 0.000, 0.0, 1.0, 0.0),
     "Lim et al., their Fig. 2b: three potentiation/depression cycles; the "
     "40x negative-drive gain makes depression need only 2 pulses against "
     "55 potentiating ones (+/-1 V, 0.1 ms wide, 0.2 ms apart).",
     _lim_2b),
    ("lim-5",
     _row(0.45, 0.000, 0.0, 1.000e-12, 2.00e-9, 5.5e-3, 1.0e-1, 40.0, 0.0, 0.0, 0.000, 0.0, 1.0, 0.0),
     "Lim et al., their Fig. 5: one potentiation/depression cycle, same pulse "
     "scheme as lim-2b.",
     _lim_5),
    ("murdoch-4c",
     _row(0.05, 2.000, 0.0, 2.500e-10, 1.40e-9, 5, 1.2e-1, 1.0, 1.0, 1.0, 0.020, 3.0e-4, 1.0, 0.0),
     "Murdoch et al., light-gated device, their Fig. 4c: potentiate/decay; "
     "light stimulus stands in as a 5 V gate hold (2 s on, 8 s decay). "
     "Channel-coupled programming (o_c = 1) per the source's reset wiring.",
     _murdoch_4c),
    ("murdoch-4d",
     _row(0.05, 1.990, 0.0, 3.000e-9, 1.15e-8, 3, 4.5e-1, 40.0, 1.0, 1.0, 0.040, 3.0e-4, 1.0, 0.0),
     "Murdoch et al., their Fig. 4d: potentiation with output-node resets at "
     "t = 14 s and t = 30 s; scripted as 5 V gate holds with -3 V, 0.1 s "
     "output pulses at the reset times.",
     _murdoch_4d),
    ("murdoch-5a",
     _row(0.05, 2.000, 0.0, 2.800e-9, 1.00e-8, 3, 8.5e-1, 40.0, 1.0, 1.0, 0.100, 7.0e-3, 1.0, 0.0),
     "Murdoch et al., their Fig. 5a: potentiate/decay with a visible "
     "long-term floor that itself fades; 5 V gate for 2 s then 18 s decay.",
     _murdoch_5a),
    ("tan-1c",
     _row(0.05, 1.400, 1.0, 5.000e-12, 4.00e-8, 5500, 1.0e-8, 345.0, 0.0, 1.0, 0.010, 1.0e-6, 1.0, 0.0),
     "Tan et al., light-gated device, their Fig. 1c: slow potentiation under "
     "constant illumination, four intensities in the source; light stands in "
     "as a 5 V gate hold for 300 s.",
     _tan_1c),
    ("tan-1d",
     _row(0.05, 1.400, 1.0, 5.000e-12, 4.00e-8, 2500, 6.0e-4, 345.0, 1.0, 1.0, 0.175, 2.0e-8, 1.0, 0.0),
     "Tan et al., their Fig. 1d: input IV curves before and after a light "
     "pulse (a 5 V, 10 s gate hold here); sweeps kept to 1.2 V peak so the "
     "channel-coupled drive stays under threshold during reads.",
     _tan_1d),
    ("tan-1e",
     _row(0.00, 0.800, 1.0, 1.000e-13, 4.00e-8, 5500, 7.0e-5, 345.0, 0.5, 1.0, 0.250, 1e-10, 1.0, 0.0),
     "Tan et al., their Fig. 1e: potentiation interrupted by four input-"
     "terminal resets; scripted as 38 s of 5 V gate alternating with 2 s, "
     "3 V input pulses (gate dark during resets).",
     _tan_1e),
    ("tang-2",
     _row(0.85, 0.000, 1.0, 1.000e-9, 2.40e-9, 1175, 2.0e-7, 1.0, 0.0, 0.0, 0.000, 0.0, 1.0, 0.0),
     "Tang et al., ECRAM, their Fig. 2: one potentiation/depression curve; "
     "current-ratio programming levels map to +/-1 V gate holds, one set "
     "time per half cycle.",
     _tang_2),
    ("tang-9",
     _row(0.00, 0.000, 1.0, 2.040e-9, 4.50e-9, 50, 4.0e-5, 1.0, 0.0, 0.0, 0.600, 1.0e-8, 1.0, 0.0),
     "Tang et al., their Fig. 9: two consecutive potentiation/depression "
     "curves; +/-1 V gate holds, 50 s per half.",
     _tang_9),
    ("tang-14",
     _row(1.00, 0.000, 1.0, 5.000e-12, 6.00e-8, 10, 9.5e-5, 1.0, 0.0, 0.0, 0.000, 0.0, 1.0, 0.0),
     "Tang et al., their Fig. 14: one potentiation/depression curve on a "
     "fully sigmoidal device; +/-1 V gate holds, 10 s per half.",
     _tang_14),
    ("tang-15",
     _row(1.00, 0.000, 1.0, 5.000e-11, 3.00e-9, 150, 2.0e-7, 1.0, 0.0, 0.0, 0.000, 0.0, 1.0, 0.0),
     "Tang et al., their Fig. 15: potentiation by voltage pulses; scripted as "
     "150 pulses of 1 V, 1 s wide, 2 s apart.",
     _tang_15),
]

_REGISTRY: dict[str, Preset] = {
    pid: Preset(pid, params, provenance) for pid, params, provenance, _ in _TABLE
}
_BUILDERS: dict[str, Callable[[GsdParams], Scenario]] = {
    pid: builder for pid, _, _, builder in _TABLE
}


def get(preset_id: str) -> Preset:
    """Look up a preset by id; UnknownPreset (with a hint) when absent."""
    try:
        return _REGISTRY[preset_id]
    except KeyError:
        close = difflib.get_close_matches(preset_id, _REGISTRY, n=1, cutoff=0.0)
        raise UnknownPreset(preset_id, close[0] if close else None) from None


def list_presets() -> list[tuple[str, str]]:
    """All (id, provenance) pairs in table order."""
    return [(p.id, p.provenance) for p in _REGISTRY.values()]


def scenario(preset: Preset | str) -> Scenario:
    """The scripted scenario reconstructing the preset's source experiment."""
    if isinstance(preset, str):
        preset = get(preset)
    return _BUILDERS[preset.id](preset.params)


def export(preset: Preset | str, path) -> None:
    """Write the preset's scenario as a scenario JSON file."""
    save_scenario(scenario(preset), path)
