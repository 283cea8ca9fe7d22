"""Command-line front end.

Exit codes: 0 success, 2 unknown preset or bad scenario input,
3 output I/O failure.  Diagnostics go to stderr; the CSV goes only to
the path named by --out, so pipelines stay clean.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import checks, presets
from .engine import ivsweep, run, write_csv
from .presets import UnknownPreset
from .stimulus import InvalidScenario, Scenario, TriangleSweep, load_scenario

ENV_DT = "GSDSIM_DT"


def _fail(code: int, message: str) -> int:
    print(f"gsdsim: error: {message}", file=sys.stderr)
    return code


def _env_dt() -> float | None:
    raw = os.environ.get(ENV_DT)
    if raw is None or raw == "":
        return None
    try:
        return float(raw)
    except ValueError:
        raise InvalidScenario(f"{ENV_DT}={raw!r} is not a number")


def _run_scenario(s: Scenario, dt_override: float | None):
    # a triangle sweep on a channel terminal tags the trace for I-V plotting
    for terminal, wf in (("in", s.inp), ("gate", s.gate)):
        if any(isinstance(seg, TriangleSweep) for seg in wf.segments):
            return ivsweep(s, terminal, dt_override=dt_override)
    return run(s, dt_override=dt_override)


def _write_plot(trace, path: str) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    panels = 3 if trace.sweep else 2
    fig, axes = plt.subplots(panels, 1, figsize=(7.0, 2.6 * panels))
    t = trace.column("t")
    g = trace.column("g_syn")
    i = trace.column("i_syn")

    axes[0].plot(t, g, lw=0.9)
    axes[0].set_ylabel("g_syn (S)")
    if min(g) > 0.0 and max(g) / min(g) > 100.0:
        axes[0].set_yscale("log")

    axes[1].plot(t, i, lw=0.9, color="tab:red")
    axes[1].set_ylabel("i_syn (A)")
    axes[1].set_xlabel("t (s)")

    if trace.sweep:
        v = trace.column("v_in" if trace.sweep == "in" else "v_gate")
        axes[2].plot(v, i, lw=0.9, color="tab:green")
        axes[2].set_xlabel(f"v_{trace.sweep} (V)")
        axes[2].set_ylabel("i_syn (A)")

    fig.suptitle(trace.label)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def cmd_run(args: argparse.Namespace) -> int:
    try:
        dt_override = args.dt if args.dt is not None else _env_dt()
        if args.preset is not None:
            s = presets.scenario(args.preset)
        else:
            s = load_scenario(args.scenario)
    except UnknownPreset as err:
        return _fail(2, str(err))
    except (InvalidScenario, OSError) as err:
        return _fail(2, f"cannot load scenario: {err}")
    try:
        trace = _run_scenario(s, dt_override)
    except InvalidScenario as err:
        return _fail(2, str(err))
    try:
        write_csv(trace, args.out)
    except OSError as err:
        return _fail(3, f"cannot write {args.out}: {err}")
    if args.plot is not None:
        try:
            _write_plot(trace, args.plot)
        except OSError as err:
            return _fail(3, f"cannot write {args.plot}: {err}")
    return 0


def cmd_list(args: argparse.Namespace) -> int:
    for pid, provenance in presets.list_presets():
        print(f"{pid:13s} {provenance}")
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    try:
        pre = presets.get(args.preset)
    except UnknownPreset as err:
        return _fail(2, str(err))
    try:
        presets.export(pre, args.out)
    except OSError as err:
        return _fail(3, f"cannot write {args.out}: {err}")
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    results = checks.run_all()
    width = max(len(name) for name, _, _ in results)
    for name, ok, detail in results:
        print(f"{name:<{width}}  {'ok' if ok else 'FAIL':4s}  {detail}")
    failed = [name for name, ok, _ in results if not ok]
    if failed:
        return _fail(1, f"first failing property: {failed[0]}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsdsim",
        description="Transient simulator for gated-synaptic device models.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="simulate a preset or scenario file to CSV")
    src = p_run.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", metavar="ID", help="preset identifier (see `gsdsim list`)")
    src.add_argument("--scenario", metavar="FILE", help="scenario JSON file")
    p_run.add_argument("--out", required=True, metavar="CSV", help="output trace path")
    p_run.add_argument("--plot", metavar="IMG", help="also render a static plot")
    p_run.add_argument("--dt", type=float, metavar="SECONDS",
                       help=f"override the scenario time step (beats ${ENV_DT})")
    p_run.set_defaults(handler=cmd_run)

    p_list = sub.add_parser("list", help="list preset identifiers with provenance")
    p_list.set_defaults(handler=cmd_list)

    p_export = sub.add_parser("export", help="write a preset as a scenario JSON file")
    p_export.add_argument("--preset", required=True, metavar="ID")
    p_export.add_argument("--out", required=True, metavar="FILE")
    p_export.set_defaults(handler=cmd_export)

    p_check = sub.add_parser("check", help="run the invariant suite over all presets")
    p_check.set_defaults(handler=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
