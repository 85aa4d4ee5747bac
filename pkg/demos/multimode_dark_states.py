# Two qubits, one mode: dark states ride the bare oscillator ladder.
#
# When the two qubits are identical and equally coupled, the singlet sector
# decouples from the mode entirely.  Its levels stay at E = n * w for every
# coupling strength, which is exactly what scan_flat_levels looks for.  A
# two-mode sweep is included for contrast; it has no flat lines.

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from asymrabi import BasisSpec, ModelConfig, ModelId, scan_flat_levels, sweep

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10.0, 4.2))

# identical qubits, zero bias.  Sorted columns only follow one physical
# level between crossings, so the scan window stops before a bright level
# dives through the dark ones and scrambles the ordering.
spec2q = BasisSpec(n_max=50, qubit_count=2)
cfg2q = ModelConfig(delta1=1.0, delta2=1.0, omega=1.0)
table = sweep(ModelId.TWO_QUBIT, cfg2q, 0.02, 0.2, 41, 8, spec2q)
flat = scan_flat_levels(table, tol=1e-6)
print("two-qubit flat level indices:", flat)
for k in range(8):
    kw = dict(color="tab:red", lw=1.8) if k in flat else dict(color="0.6", lw=0.9)
    ax1.plot(table.g_grid, table.energies[:, k], **kw)
ax1.set_xlabel("g1 = g2")
ax1.set_ylabel("E / w")
ax1.set_title("two qubits: dark states in red")

# breaking the qubit symmetry removes them
cfg_broken = ModelConfig(delta1=1.0, delta2=0.8)
broken = sweep(ModelId.TWO_QUBIT, cfg_broken, 0.02, 0.2, 41, 8, spec2q)
print("detuned qubits, flat levels:", scan_flat_levels(broken, tol=1e-6))

# two modes, one qubit: nothing is protected, all levels bend
spec2m = BasisSpec.two_mode(16, 16)
cfg2m = ModelConfig(delta=1.0, omega1=1.0, omega2=1.3)
table2m = sweep(ModelId.TWO_MODE, cfg2m, 0.02, 0.8, 41, 8, spec2m)
print("two-mode flat levels:", scan_flat_levels(table2m, tol=1e-6))
for k in range(8):
    ax2.plot(table2m.g_grid, table2m.energies[:, k], lw=1.0)
ax2.set_xlabel("g1 = g2")
ax2.set_title("one qubit, two modes (w2 = 1.3 w1)")

fig.tight_layout()
out = pathlib.Path(__file__).with_suffix(".png")
fig.savefig(out, dpi=150)
print("wrote", out)
