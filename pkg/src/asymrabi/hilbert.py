"""Operator algebra on truncated qubit-oscillator Hilbert spaces.

Dense real matrices for one or two qubits coupled to one or two bosonic
modes.  Every Hamiltonian in this package is assembled from the operators
defined here, in a fixed product ordering:

* single mode :  spin (x) Fock,  index = s * n_max + n,  s = 0 (up), 1 (down)
* two modes   :  spin (x) mode 1 (x) mode 2
* two qubits  :  qubit 1 (x) qubit 2 (x) Fock

Construction stays in float64 throughout: the only term that involves
sigma_y enters as the real antisymmetric matrix i*sigma_y, and the product
of two antisymmetric factors is symmetric.  Complex arithmetic appears only
in time evolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

__all__ = [
    "DEFAULT_N_MAX",
    "BasisSpec",
    "ladder_operators",
    "pauli",
    "kron",
    "parity_operator",
    "commutator_norm",
]

# Converged for the displaced-state phenomenology studied here (g/omega <= 1.5
# on the lowest ten or so levels); raise it for stronger coupling.
DEFAULT_N_MAX = 120


@dataclass(frozen=True)
class BasisSpec:
    """Truncation of a qubit-oscillator product basis.

    Parameters
    ----------
    n_max : int
        Number of Fock states per mode, ``|0> .. |n_max - 1>``.  For a
        two-mode basis this is the first mode's truncation.
    qubit_count : int
        1 or 2 two-level systems.
    n2_max : int or None
        Truncation of a second bosonic mode.  Setting it selects the
        two-mode, single-qubit layout.
    """

    n_max: int = DEFAULT_N_MAX
    qubit_count: int = 1
    n2_max: int | None = None

    def __post_init__(self) -> None:
        if int(self.n_max) != self.n_max or self.n_max < 2:
            raise ValueError(f"n_max must be an integer >= 2, got {self.n_max}")
        if self.qubit_count not in (1, 2):
            raise ValueError(f"qubit_count must be 1 or 2, got {self.qubit_count}")
        if self.n2_max is not None:
            if int(self.n2_max) != self.n2_max or self.n2_max < 2:
                raise ValueError(f"n2_max must be an integer >= 2, got {self.n2_max}")
            if self.qubit_count != 1:
                raise ValueError("two-mode bases carry a single qubit")

    @classmethod
    def two_mode(cls, n1_max: int, n2_max: int) -> "BasisSpec":
        return cls(n_max=n1_max, qubit_count=1, n2_max=n2_max)

    @property
    def n1_max(self) -> int:
        return self.n_max

    @property
    def dim(self) -> int:
        if self.n2_max is not None:
            return 2 * self.n_max * self.n2_max
        return self.n_max * 2**self.qubit_count


def ladder_operators(spec: BasisSpec | int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Annihilation, creation and number operators on n_max Fock states.

    Convention ``<n-1|a|n> = sqrt(n)``: `a` carries its entries on the
    superdiagonal, ``a_dagger = a.T`` on the subdiagonal.  On the truncated
    space ``[a, a_dagger] = 1`` holds exactly on all but the last diagonal
    entry; keep n_max comfortably above any occupation that matters.

    Returns
    -------
    (a, a_dagger, number) : three (n_max, n_max) float64 arrays
    """
    n_max = spec.n_max if isinstance(spec, BasisSpec) else int(spec)
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    root = np.sqrt(np.arange(1.0, n_max))
    a = np.diag(root, k=1)
    return a, a.T.copy(), np.diag(np.arange(float(n_max)))


def pauli(axis: str) -> np.ndarray:
    """Pauli matrix for axis 'x', 'y' or 'z' in the sigma_z eigenbasis.

    'x' and 'z' are real float64; 'y' is returned complex and is not used in
    any Hamiltonian here (the anisotropic coupling enters via the real
    matrix i*sigma_y assembled in the model builders).
    """
    if axis == "x":
        return np.array([[0.0, 1.0], [1.0, 0.0]])
    if axis == "y":
        return np.array([[0.0, -1.0j], [1.0j, 0.0]])
    if axis == "z":
        return np.array([[1.0, 0.0], [0.0, -1.0]])
    raise ValueError(f"axis must be 'x', 'y' or 'z', got {axis!r}")


def kron(*factors: np.ndarray) -> np.ndarray:
    """Kronecker product of one or more operators, leftmost factor slowest.

    ``kron(A, B, C)`` is the matrix of ``A (x) B (x) C`` in the product
    ordering used throughout this package.
    """
    if not factors:
        raise ValueError("kron needs at least one factor")
    return reduce(np.kron, factors)


def parity_operator(spec: BasisSpec) -> np.ndarray:
    """Parity sigma_z * exp(i pi a_dagger a) on a single-qubit, single-mode basis.

    Diagonal with entries +-1: +(-1)^n on the spin-up block, -(-1)^n on the
    spin-down block.  Commutes with every zero-bias single-mode Hamiltonian
    built by this package and conjugates a biased one into its bias-reflected
    partner.
    """
    if not isinstance(spec, BasisSpec):
        raise TypeError("parity_operator expects a BasisSpec")
    if spec.qubit_count != 1 or spec.n2_max is not None:
        raise ValueError("parity_operator is defined for single-qubit, single-mode bases")
    signs = np.where(np.arange(spec.n_max) % 2 == 0, 1.0, -1.0)
    return kron(pauli("z"), np.diag(signs))


def commutator_norm(op_a: np.ndarray, op_b: np.ndarray) -> float:
    """Frobenius norm of the commutator [A, B].

    Zero (to round-off) certifies a shared eigenbasis; used to check parity
    invariance and qubit-exchange symmetry.
    """
    op_a = np.asarray(op_a)
    op_b = np.asarray(op_b)
    if op_a.shape != op_b.shape or op_a.ndim != 2 or op_a.shape[0] != op_a.shape[1]:
        raise ValueError(f"operands must be equal-shape square matrices, got {op_a.shape} and {op_b.shape}")
    return float(np.linalg.norm(op_a @ op_b - op_b @ op_a))
