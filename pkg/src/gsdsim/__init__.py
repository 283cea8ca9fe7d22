"""gsdsim: compact behavioral model of gated synaptic devices.

State-variable conductance law, thresholded gate programming with short- and
long-term plasticity, a fixed-step transient engine, and a library of
presets replicating published device experiments.
"""

from .model import (DegenerateConductance, GsdParams, GsdState, NonMonotonicTime,
                    NormConstants, RangeViolation, SigmoidUndefined, StepResult,
                    TerminalVoltages, X_MAX, amplify_negative, channel_current,
                    conductance, decay_ltp, decay_stp, delta_x, delta_x_min,
                    effective_voltage, norm_constants, step, validate_params)
from .stimulus import (Hold, InvalidScenario, PulseTrain, Ramp, Scenario,
                       TriangleSweep, Waveform, load_scenario, save_scenario,
                       scenario_duration, scenario_from_dict, scenario_to_dict)
from .engine import (CSV_HEADER, MissingSweep, Trace, TraceRecord, UnstableStep,
                     ivsweep, run, write_csv)
from .presets import Preset, UnknownPreset, export, get, list_presets, scenario

__version__ = "0.1.0"

__all__ = [
    "DegenerateConductance", "GsdParams", "GsdState", "NonMonotonicTime",
    "NormConstants", "RangeViolation", "SigmoidUndefined", "StepResult",
    "TerminalVoltages", "X_MAX", "amplify_negative", "channel_current",
    "conductance", "decay_ltp", "decay_stp", "delta_x", "delta_x_min",
    "effective_voltage", "norm_constants", "step", "validate_params",
    "Hold", "InvalidScenario", "PulseTrain", "Ramp", "Scenario",
    "TriangleSweep", "Waveform", "load_scenario", "save_scenario",
    "scenario_duration", "scenario_from_dict", "scenario_to_dict",
    "CSV_HEADER", "MissingSweep", "Trace", "TraceRecord", "UnstableStep",
    "ivsweep", "run", "write_csv",
    "Preset", "UnknownPreset", "export", "get", "list_presets", "scenario",
    "__version__",
]
