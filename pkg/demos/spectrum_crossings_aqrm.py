"""
Level crossings of the biased Rabi model
========================================

Sweep the coupling at four bias values and watch the true crossings
appear only when the bias is an integer multiple of the mode frequency.
Detected crossings are circled; everything else that looks like a
degeneracy is an avoided crossing with a finite gap.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from asymrabi import BasisSpec, ModelConfig, ModelId, find_crossings, sweep

DELTA = 0.5
N_MAX = 110
LEVELS = 6
spec = BasisSpec(n_max=N_MAX)

fig, axes = plt.subplots(2, 2, figsize=(9.5, 7.0), sharex=True, sharey=True)

for ax, eps in zip(axes.flat, (0.0, 0.3, 1.0, 2.0)):
    cfg = ModelConfig(delta=DELTA, omega=1.0, epsilon=eps)
    table = sweep(ModelId.AQRM, cfg, 0.005, 1.2, 161, LEVELS, spec)
    for k in range(LEVELS):
        ax.plot(table.g_grid, table.energies[:, k], lw=1.0)

    records = find_crossings(
        ModelId.AQRM, cfg, 0.005, 1.2, 161, LEVELS, spec, truncations=(N_MAX, N_MAX + 40)
    )
    hits = [r for r in records if r.verdict == "crossing"]
    print(f"eps = {eps}: {len(hits)} crossing(s), {len(records) - len(hits)} avoided")
    for r in records:
        print(
            f"  pair {r.pair}  g* = {r.g_star:.6f}  E* = {r.e_star:.6f}"
            f"  gap = {r.min_gap:.2e}  {r.verdict}"
        )
    if hits:
        ax.scatter(
            [r.g_star for r in hits],
            [r.e_star for r in hits],
            s=90, facecolors="none", edgecolors="k", zorder=5,
        )
    ax.set_title(f"eps = {eps} w")

for ax in axes[-1]:
    ax.set_xlabel("g / w")
for ax in axes[:, 0]:
    ax.set_ylabel("(E + g^2/w) / w")
axes[0, 0].set_ylim(-0.8, 3.2)
fig.suptitle(f"biased Rabi spectrum, Delta = {DELTA}")
fig.tight_layout()

out = pathlib.Path(__file__).with_suffix(".png")
fig.savefig(out, dpi=150)
print("wrote", out)
