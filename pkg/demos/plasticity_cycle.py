"""Potentiate, decay, reset: the short-/long-term plasticity cycle.

A gate pulse drives the state up; with the gate released the state
decays, but not to zero: the long-term floor x_min rose during
programming and only a negative gate bias erases it.  The script also
round-trips the scenario through its JSON form to show the file format.

Writes demos/out/plasticity_cycle.png, .csv, and .json.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from gsdsim import (GsdParams, Hold, Scenario, Waveform, load_scenario, run,
                    save_scenario, write_csv)

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

scenario = Scenario(
    params=GsdParams(g_c=0.5, t_set=1.0, r_stp=0.5, q_ltp=0.3, r_ltp=1e-5),
    gate=Waveform([Hold(1.0, 0.8), Hold(0.0, 10.0), Hold(-2.0, 3.0)]),
    inp=Waveform([Hold(0.1, 13.8)]),
    dt=0.01, duration=13.8,
    label="plasticity-cycle")

# the JSON form is the same scenario; a run from either is bit-identical
save_scenario(scenario, OUT / "plasticity_cycle.json")
trace = run(load_scenario(OUT / "plasticity_cycle.json"))
write_csv(trace, OUT / "plasticity_cycle.csv")

t = trace.column("t")
fig, (ax_x, ax_g) = plt.subplots(2, 1, figsize=(7, 6), sharex=True)

ax_x.plot(t, trace.column("x"), label="x")
ax_x.plot(t, trace.column("x_min"), label="x_min (long-term floor)")
ax_x.set_ylabel("state")
ax_x.legend(fontsize=8)

ax_g.semilogy(t, trace.column("g_syn"), color="tab:purple")
ax_g.set_ylabel("g_syn (S)")
ax_g.set_xlabel("t (s)")

for edge in (0.8, 10.8):
    for ax in (ax_x, ax_g):
        ax.axvline(edge, color="k", lw=0.5, ls=":")

ax_x.set_title("gate +1 V, then released, then -2 V reset")
fig.tight_layout()
fig.savefig(OUT / "plasticity_cycle.png", dpi=150)

floor = trace.column("x_min")
print(f"peak x       = {max(trace.column('x')):.3f}")
print(f"floor at 10.8 s = {floor[1080]:.3f} (erased to {floor[-1]:.3f} by reset)")
print(f"wrote {OUT / 'plasticity_cycle.png'}")
