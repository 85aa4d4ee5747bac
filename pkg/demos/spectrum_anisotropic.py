"""Anisotropic coupling: rotating and counter-rotating strengths differ.

With g2 = lam * g1 the special bias becomes 2 sqrt(lam)/(1 + lam) * w.
The sweep below uses lam = 0.5; crossings show up at the condition value
and at twice it, but not in between.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from asymrabi import (
    BasisSpec,
    ModelConfig,
    ModelId,
    epsilon_condition,
    find_crossings,
    sweep,
)

LAM = 0.5
eps_c = epsilon_condition(ModelId.ANISO_AQRM, ModelConfig(lam=LAM))
print(f"anisotropic condition for lam = {LAM}: eps_c = {eps_c:.12f}")

N_MAX = 110
spec = BasisSpec(n_max=N_MAX)
fig, axes = plt.subplots(1, 3, figsize=(12.5, 4.0), sharey=True)

for ax, factor in zip(axes, (0.5, 1.0, 2.0)):
    cfg = ModelConfig(delta=0.5, omega=1.0, lam=LAM, epsilon=factor * eps_c)
    # the g axis is g1; g2 follows as lam * g1
    table = sweep(ModelId.ANISO_AQRM, cfg, 0.005, 1.2, 161, 6, spec)
    for k in range(6):
        ax.plot(table.g_grid, table.energies[:, k], lw=1.0)
    records = find_crossings(
        ModelId.ANISO_AQRM, cfg, 0.005, 1.2, 161, 6, spec,
        truncations=(N_MAX, N_MAX + 40),
    )
    hits = [r for r in records if r.verdict == "crossing"]
    print(f"eps = {factor:g} eps_c: {len(hits)} crossing(s)")
    if hits:
        ax.scatter(
            [r.g_star for r in hits],
            [r.e_star for r in hits],
            s=90, facecolors="none", edgecolors="k", zorder=5,
        )
    ax.set_title(f"eps = {factor:g} eps_c")
    ax.set_xlabel("g1 / w")

axes[0].set_ylabel("(E + (1+lam^2) g1^2/w) / w")
fig.suptitle(f"anisotropic model, Delta = 0.5, lam = {LAM}")
fig.tight_layout()

out = pathlib.Path(__file__).with_suffix(".png")
fig.savefig(out, dpi=150)
print("wrote", out)
