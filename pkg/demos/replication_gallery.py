"""Run every shipped preset and tile the resulting conductance traces.

Each preset pairs one fitted parameter row with a scripted stimulus
approximating the source experiment.  The gallery is the quickest way to
eyeball all 26 behaviors at once; per-preset CSVs land next to it for
closer inspection.

Writes demos/out/replication_gallery.png and demos/out/traces/*.csv.
"""

import math
import pathlib
import time

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from gsdsim import list_presets, run, scenario, write_csv

OUT = pathlib.Path(__file__).parent / "out"
TRACES = OUT / "traces"
TRACES.mkdir(parents=True, exist_ok=True)

ids = [pid for pid, _ in list_presets()]
cols = 4
rows = math.ceil(len(ids) / cols)
fig, axes = plt.subplots(rows, cols, figsize=(3.2 * cols, 2.2 * rows))

t0 = time.perf_counter()
for ax, pid in zip(axes.flat, ids):
    tr = run(scenario(pid))
    write_csv(tr, TRACES / f"{pid}.csv")
    g = tr.column("g_syn")
    ax.plot(tr.column("t"), g, lw=0.8)
    if min(g) > 0.0 and max(g) / min(g) > 100.0:
        ax.set_yscale("log")
    ax.set_title(pid, fontsize=8)
    ax.tick_params(labelsize=6)
for ax in axes.flat[len(ids):]:
    ax.axis("off")

fig.suptitle("conductance vs. time, all presets")
fig.tight_layout()
fig.savefig(OUT / "replication_gallery.png", dpi=130)
print(f"{len(ids)} presets simulated in {time.perf_counter() - t0:.2f} s")
print(f"wrote {OUT / 'replication_gallery.png'} and {TRACES}/*.csv")
