# Two representations of one operator.
#
# The package builds the same Hamiltonian in the bare Fock basis and in the
# basis of displaced oscillator states D(-/+ g/w)|n>.  This script checks the
# two routes against each other and shows what the analytic well-to-well
# overlap table looks like.

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from asymrabi import (
    BasisSpec,
    ModelConfig,
    ModelId,
    build_displaced_matrix,
    build_single_mode,
    displacement_operator_numeric,
    overlap_table,
)

# 1. analytic overlaps vs a brute-force matrix exponential
alpha = 0.8
table = overlap_table(alpha, 14)
numeric = displacement_operator_numeric(-2.0 * alpha, 256)[:14, :14]
print(f"overlap table vs numeric displacement (alpha = {alpha}):"
      f" max dev = {np.abs(table - numeric).max():.3e}")

# 2. spectra from the two bases agree long before either is exact
for model, cfg in (
    (ModelId.AQRM, ModelConfig(delta=1.0, omega=1.0, epsilon=0.3, g=0.8)),
    (ModelId.ARSM, ModelConfig(delta=0.8, omega=1.0, stark_u=0.5, g=1.0)),
):
    fock = np.linalg.eigvalsh(build_single_mode(model, cfg, BasisSpec(n_max=120)))
    disp = np.linalg.eigvalsh(build_displaced_matrix(model, cfg, 120))
    dev = np.abs(np.sort(fock)[:10] - np.sort(disp)[:10]).max()
    print(f"{model.value}: lowest-10 basis disagreement = {dev:.3e}")
    print("   lowest five:", " ".join(f"{v:+.6f}" for v in np.sort(fock)[:5]))

# 3. picture: overlaps die off like a displaced Gaussian, sign-alternating
fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9.5, 4.0))
im = ax1.imshow(table, cmap="RdBu_r", vmin=-0.6, vmax=0.6, origin="lower")
ax1.set_xlabel("n (plus well)")
ax1.set_ylabel("m (minus well)")
ax1.set_title(f"<m-|n+> at alpha = {alpha}")
fig.colorbar(im, ax=ax1, shrink=0.85)

# the 0-0 element decays as exp(-2 alpha^2): the tunnelling suppression
alphas = np.linspace(0.0, 2.0, 80)
ax2.semilogy(alphas, [overlap_table(a, 2)[0, 0] for a in alphas], label="<0-|0+>")
ax2.semilogy(alphas, np.exp(-2.0 * alphas**2), "k--", lw=0.8, label="exp(-2 a^2)")
ax2.set_xlabel("alpha = g / w")
ax2.set_title("ground overlap vs displacement")
ax2.legend()
fig.tight_layout()

out = pathlib.Path(__file__).with_suffix(".png")
fig.savefig(out, dpi=150)
print("wrote", out)
