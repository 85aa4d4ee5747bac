"""
Bias-selective tunnelling between the two displaced wells
=========================================================

Prepare |0+,+> and let it evolve.  At eps = 0 the 0-0 channel is resonant
and the state swaps completely into |0-,->.  A small bias detunes that
channel and freezes the state.  At eps = w the 0-1 channel comes into
resonance instead and the state goes to |1-,->.  The Stark model does the
same trick at its own condition value eps_c.
"""

import math
import pathlib
import warnings

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from asymrabi import (
    ModelConfig,
    ModelId,
    epsilon_condition,
    population_trace,
    two_level_populations,
)

fig, axes = plt.subplots(2, 2, figsize=(10.0, 6.5), sharex=True, sharey=True)
styles = {"0+": "tab:blue", "0-": "tab:green", "1+": "tab:orange", "1-": "tab:red"}

# three bias values for the plain model, Delta = 0.1, g = 1
for ax, eps in zip(axes.flat, (0.0, 0.1, 1.0)):
    cfg = ModelConfig(delta=0.1, omega=1.0, g=1.0, epsilon=eps)
    trace = population_trace(ModelId.AQRM, cfg, n_max=110, t_max_in_T=2.0, steps=1200)
    for col, label in enumerate(trace.labels):
        ax.plot(trace.times, trace.populations[:, col], color=styles[label], label=label)
    peak_to = trace.labels[int(np.argmax(trace.populations[:, 1:].max(axis=0))) + 1]
    print(
        f"eps = {eps}: T = {trace.frequencies.period_T:10.3f}, "
        f"peak transfer {trace.populations[:, 1:].max():.4f} into |{peak_to}>"
    )
    ax.set_title(f"eps = {eps} w")

# overlay the closed-form resonant channel on the eps = 0 panel
cfg0 = ModelConfig(delta=0.1, omega=1.0, g=1.0)
trace0 = population_trace(ModelId.AQRM, cfg0, n_max=110, t_max_in_T=2.0, steps=1200)
rabi00 = 0.05 * math.exp(-2.0)
_, p_go = two_level_populations(trace0.times * trace0.frequencies.period_T, 0.0, rabi00)
axes[0, 0].plot(trace0.times, p_go, "k--", lw=0.8, label="two-level formula")
axes[0, 0].legend(fontsize=7, ncol=2)

# the Stark model at its own condition value
arsm = ModelConfig(delta=0.8, omega=1.0, g=1.0, stark_u=0.5)
eps_c = epsilon_condition(ModelId.ARSM, arsm)
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    for factor in (0.3, 1.0, 1.15):
        cfg = ModelConfig(delta=0.8, omega=1.0, g=1.0, stark_u=0.5, epsilon=factor * eps_c)
        tr = population_trace(ModelId.ARSM, cfg, n_max=110, t_max_in_T=2.0, steps=1200)
        peak = tr.populations[:, 3].max()
        print(f"stark model, eps = {factor:g} eps_c: peak P(1-) = {peak:.4f}")
        if factor == 1.0:
            ax = axes[1, 1]
            for col, label in enumerate(tr.labels):
                ax.plot(tr.times, tr.populations[:, col], color=styles[label], label=label)
            ax.set_title("stark model, eps = eps_c")

for ax in axes[-1]:
    ax.set_xlabel("t / T")
for ax in axes[:, 0]:
    ax.set_ylabel("population")
fig.tight_layout()

out = pathlib.Path(__file__).with_suffix(".png")
fig.savefig(out, dpi=150)
print("wrote", out)
