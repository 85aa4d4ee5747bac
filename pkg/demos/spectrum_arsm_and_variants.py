# Stark-shifted Rabi model: the special bias is no longer the mode frequency.
# With a number-dependent Stark term U a+a sigma_z the crossings reappear at
# eps_c = sqrt((w - U)(w + U)) instead of at w, and the two one-sided variants
# split that into sqrt(w(w +/- U)).  This script prints the three condition
# values and sweeps the full model at eps/eps_c in {0, 0.3, 1, 2}.

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

base = ModelConfig(delta=1.0, omega=1.0, stark_u=0.5)
eps_c = epsilon_condition(ModelId.ARSM, base)
print("first special bias values for U = 0.5, w = 1:")
print(f"  full Stark term      eps_c = {eps_c:.12f}")
print(f"  upper-level variant  eps_c = {epsilon_condition(ModelId.ARSM_VARIANT_PLUS, base):.12f}")
print(f"  lower-level variant  eps_c = {epsilon_condition(ModelId.ARSM_VARIANT_MINUS, base):.12f}")

N_MAX = 110
spec = BasisSpec(n_max=N_MAX)
fig, axes = plt.subplots(2, 2, figsize=(9.5, 7.0), sharex=True, sharey=True)

for ax, factor in zip(axes.flat, (0.0, 0.3, 1.0, 2.0)):
    cfg = ModelConfig(delta=1.0, omega=1.0, stark_u=0.5, epsilon=factor * eps_c)
    table = sweep(ModelId.ARSM, cfg, 0.005, 1.2, 161, 6, spec)
    for k in range(6):
        ax.plot(table.g_grid, table.energies[:, k], lw=1.0)
    records = find_crossings(
        ModelId.ARSM, cfg, 0.005, 1.2, 161, 6, spec, truncations=(N_MAX, N_MAX + 40)
    )
    hits = [r for r in records if r.verdict == "crossing"]
    print(f"eps = {factor:g} eps_c: {len(hits)} crossing(s) among the lowest 6")
    if hits:
        ax.scatter(
            [r.g_star for r in hits],
            [r.e_star for r in hits],
            s=90, facecolors="none", edgecolors="k", zorder=5,
        )
    ax.set_title(f"eps = {factor:g} eps_c")

for ax in axes[-1]:
    ax.set_xlabel("g / w")
for ax in axes[:, 0]:
    ax.set_ylabel("(E + g^2/w) / w")
fig.suptitle("Stark-shifted Rabi spectrum, Delta = 1, U = 0.5")
fig.tight_layout()

out = pathlib.Path(__file__).with_suffix(".png")
fig.savefig(out, dpi=150)
print("wrote", out)
