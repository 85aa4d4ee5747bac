"""Asymmetric quantum Rabi models: hidden-symmetry spectra and tunnelling.

A biased two-level system coupled to a quantized mode keeps true level
crossings at special bias values even though no symmetry operator is in
sight.  This package builds the family's Hamiltonians (plain, Rabi-Stark
and its spin-projected variants, anisotropic, two-mode, two-qubit),
resolves crossing versus avoided crossing numerically, constructs the
displaced-oscillator picture that explains the selection rule, and evolves
the bias-controlled tunnelling dynamics that follows from it.
"""

from .hilbert import (
    BasisSpec,
    commutator_norm,
    kron,
    ladder_operators,
    parity_operator,
    pauli,
)
from .models import (
    ModelConfig,
    ModelId,
    SINGLE_MODE_MODELS,
    build_anisotropic,
    build_hamiltonian,
    build_single_mode,
    build_two_mode,
    build_two_qubit,
    epsilon_condition,
    rescale_offset,
)
from .displaced import (
    build_displaced_matrix,
    displaced_energy,
    displaced_overlap,
    displacement_operator_numeric,
    laguerre_assoc,
    overlap_table,
    tunneling_element,
)
from .spectra import (
    ConvergenceError,
    CrossingRecord,
    EigenSystem,
    GapMinimum,
    SpectrumSweep,
    classify_crossing,
    convergence_check,
    eigh,
    find_crossings,
    min_gap,
    scan_flat_levels,
    sweep,
)
from .dynamics import (
    PopulationTrace,
    TunnellingFrequencies,
    evolve,
    population_trace,
    three_level_hamiltonian,
    tunneling_frequencies,
    two_level_populations,
)

__version__ = "0.1.0"

__all__ = [
    "BasisSpec",
    "commutator_norm",
    "kron",
    "ladder_operators",
    "parity_operator",
    "pauli",
    "ModelConfig",
    "ModelId",
    "SINGLE_MODE_MODELS",
    "build_anisotropic",
    "build_hamiltonian",
    "build_single_mode",
    "build_two_mode",
    "build_two_qubit",
    "epsilon_condition",
    "rescale_offset",
    "build_displaced_matrix",
    "displaced_energy",
    "displaced_overlap",
    "displacement_operator_numeric",
    "laguerre_assoc",
    "overlap_table",
    "tunneling_element",
    "ConvergenceError",
    "CrossingRecord",
    "EigenSystem",
    "GapMinimum",
    "SpectrumSweep",
    "classify_crossing",
    "convergence_check",
    "eigh",
    "find_crossings",
    "min_gap",
    "scan_flat_levels",
    "sweep",
    "PopulationTrace",
    "TunnellingFrequencies",
    "evolve",
    "population_trace",
    "three_level_hamiltonian",
    "tunneling_frequencies",
    "two_level_populations",
    "__version__",
]
