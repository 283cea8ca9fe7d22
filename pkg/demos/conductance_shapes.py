"""Sweep the conductance-shape blend.

A single parameter g_c morphs the state-to-conductance map from an
inverse exponential (g_c=0) through a straight line (g_c=0.5) to a
sigmoid (g_c=1).  This script draws the family on both linear and log
axes and prints the endpoint anchoring for each curve.

Writes demos/out/conductance_shapes.png.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from gsdsim import GsdParams, conductance, norm_constants

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

xs = np.linspace(0.0, 1.0, 501)
fig, (ax_lin, ax_log) = plt.subplots(1, 2, figsize=(10, 4), sharex=True)

for g_c in (0.0, 0.25, 0.5, 0.75, 1.0):
    p = GsdParams(g_c=g_c)
    n = norm_constants(p)
    g = [conductance(float(x), p, n) for x in xs]
    label = f"g_c = {g_c}"
    ax_lin.plot(xs, g, label=label)
    ax_log.semilogy(xs, g, label=label)
    print(f"g_c={g_c}: g(0) = {g[0]:.6e} S, g(1) = {g[-1]:.6e} S")

for ax in (ax_lin, ax_log):
    ax.set_xlabel("state x")
    ax.set_ylabel("g_syn (S)")
    ax.legend(fontsize=8)
ax_lin.set_title("shape blend, linear axis")
ax_log.set_title("same curves, log axis")
fig.tight_layout()
fig.savefig(OUT / "conductance_shapes.png", dpi=150)
print(f"wrote {OUT / 'conductance_shapes.png'}")
