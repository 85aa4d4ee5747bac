"""Hamiltonians of the asymmetric quantum Rabi model and its relatives.

All builders return dense real symmetric matrices (hbar = 1) in the product
ordering fixed by :mod:`asymrabi.hilbert`.  The family shares one structural
story: a two-level system with a bias (epsilon/2) sigma_x coupled to one or
two oscillators.  At special values of the bias, level crossings reappear in
the spectrum although no known operator commutes with the Hamiltonian; the
closed-form bias conditions implemented by :func:`epsilon_condition` are

* asymmetric Rabi model (AQRM):            epsilon = n * omega
* asymmetric Rabi-Stark model (ARSM):      epsilon = n * sqrt((omega - U)(omega + U))
* spin-projected Stark variants:           epsilon = n * sqrt(omega (omega +- U))
* anisotropic AQRM (g2 = lam * g1):        epsilon = n * 2 sqrt(lam)/(1 + lam) * omega

No closed form is known for the two-mode and two-qubit members; those are
covered by numerical scans only (see :mod:`asymrabi.spectra`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .hilbert import BasisSpec, kron, ladder_operators, pauli

__all__ = [
    "ModelId",
    "ModelConfig",
    "SINGLE_MODE_MODELS",
    "build_single_mode",
    "build_anisotropic",
    "build_two_mode",
    "build_two_qubit",
    "build_hamiltonian",
    "epsilon_condition",
    "rescale_offset",
]


class ModelId(Enum):
    """Members of the asymmetric Rabi family handled by this package."""

    QRM = "qrm"
    AQRM = "aqrm"
    ARSM = "arsm"
    ARSM_VARIANT_PLUS = "arsm-variant-plus"
    ARSM_VARIANT_MINUS = "arsm-variant-minus"
    ANISO_AQRM = "aniso-aqrm"
    TWO_MODE = "two-mode"
    TWO_QUBIT = "two-qubit"


SINGLE_MODE_MODELS = frozenset(
    {
        ModelId.QRM,
        ModelId.AQRM,
        ModelId.ARSM,
        ModelId.ARSM_VARIANT_PLUS,
        ModelId.ARSM_VARIANT_MINUS,
        ModelId.ANISO_AQRM,
    }
)


@dataclass(frozen=True)
class ModelConfig:
    """Physical parameters; each model reads the fields it needs.

    Single-mode members use (delta, omega, g, epsilon) plus stark_u (Stark
    models) or lam = g2/g1 (anisotropic, whose coupling is g1).  The
    two-mode model uses (delta, epsilon, omega1, omega2, g1, g2); the
    two-qubit model uses (delta1, delta2, epsilon1, epsilon2, omega, g1, g2).

    Validated on construction: positive mode frequencies, non-negative
    couplings, |stark_u| < omega (the Stark spectrum is unbounded below
    otherwise), lam != 0.
    """

    delta: float = 1.0
    omega: float = 1.0
    g: float = 0.0
    epsilon: float = 0.0
    stark_u: float = 0.0
    lam: float = 1.0
    omega1: float = 1.0
    omega2: float = 1.0
    g1: float = 0.0
    g2: float = 0.0
    delta1: float = 1.0
    delta2: float = 1.0
    epsilon1: float = 0.0
    epsilon2: float = 0.0

    def __post_init__(self) -> None:
        for name in ("omega", "omega1", "omega2"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        for name in ("g", "g1", "g2"):
            if getattr(self, name) < 0.0:
                raise ValueError(f"{name} must be non-negative, got {getattr(self, name)}")
        if abs(self.stark_u) >= self.omega:
            raise ValueError(
                f"stark_u must satisfy |U| < omega, got U = {self.stark_u} with omega = {self.omega}"
            )
        if self.lam == 0.0:
            raise ValueError("lam (= g2/g1) must be nonzero")


def _single_mode_parts(cfg: ModelConfig, spec: BasisSpec):
    if spec.qubit_count != 1 or spec.n2_max is not None:
        raise ValueError("single-mode models need a single-qubit, single-mode BasisSpec")
    a, ad, num = ladder_operators(spec)
    eye = np.eye(spec.n_max)
    return a, ad, num, eye


def build_single_mode(model: ModelId, cfg: ModelConfig, spec: BasisSpec) -> np.ndarray:
    """Hamiltonian matrix of a single-qubit, single-mode family member.

    QRM/AQRM:  (delta/2) sigma_z + omega a'a + g sigma_x (a + a') + (epsilon/2) sigma_x,
    with the QRM the epsilon = 0 member (a nonzero configured bias is
    rejected rather than ignored).  ARSM adds U a'a sigma_z; the projected
    variants add +U a'a on the spin-up block or subtract it on the spin-down
    block; the anisotropic member delegates to :func:`build_anisotropic`
    with g2 = lam * g1.

    The matrix is exactly symmetric entrywise, and its restriction to Fock
    indices below n_max - 1 does not depend on n_max.
    """
    if model not in SINGLE_MODE_MODELS:
        raise ValueError(f"{model} is not a single-mode model")
    if model is ModelId.ANISO_AQRM:
        return build_anisotropic(
            cfg.delta, cfg.omega, cfg.epsilon, cfg.g1, cfg.lam * cfg.g1, spec
        )
    if model is ModelId.QRM and cfg.epsilon != 0.0:
        raise ValueError("the QRM has zero bias; use AQRM for epsilon != 0")

    a, ad, num, eye = _single_mode_parts(cfg, spec)
    sx, sz = pauli("x"), pauli("z")
    eye2 = np.eye(2)
    h = (
        0.5 * cfg.delta * kron(sz, eye)
        + cfg.omega * kron(eye2, num)
        + cfg.g * kron(sx, a + ad)
        + 0.5 * cfg.epsilon * kron(sx, eye)
    )
    if model is ModelId.ARSM:
        h += cfg.stark_u * kron(sz, num)
    elif model is ModelId.ARSM_VARIANT_PLUS:
        h += cfg.stark_u * kron(np.diag([1.0, 0.0]), num)
    elif model is ModelId.ARSM_VARIANT_MINUS:
        h -= cfg.stark_u * kron(np.diag([0.0, 1.0]), num)
    return h


def build_anisotropic(
    delta: float, omega: float, epsilon: float, g1: float, g2: float, spec: BasisSpec
) -> np.ndarray:
    """Anisotropic asymmetric Rabi Hamiltonian with independent couplings.

    g1 weights the co-rotating part (sigma_- a' + sigma_+ a), g2 the
    counter-rotating part.  Regrouping keeps the matrix real:

        (g1 + g2)/2 * sigma_x (a' + a)  +  (g2 - g1)/2 * (i sigma_y)(a' - a)

    where i*sigma_y = [[0, 1], [-1, 0]] and a' - a are both antisymmetric,
    so their Kronecker product is symmetric.  The lam-parameterized family
    member fixes g2 = lam * g1; this entry point also admits unrelated
    couplings, for which no bias condition is claimed.
    """
    if omega <= 0.0:
        raise ValueError(f"omega must be positive, got {omega}")
    a, ad, num, eye = _single_mode_parts(ModelConfig(), spec)
    sx, sz = pauli("x"), pauli("z")
    i_sy = np.array([[0.0, 1.0], [-1.0, 0.0]])
    return (
        omega * kron(np.eye(2), num)
        + 0.5 * delta * kron(sz, eye)
        + 0.5 * epsilon * kron(sx, eye)
        + 0.5 * (g1 + g2) * kron(sx, ad + a)
        + 0.5 * (g2 - g1) * kron(i_sy, ad - a)
    )


def build_two_mode(cfg: ModelConfig, spec: BasisSpec) -> np.ndarray:
    """Two oscillators sharing one biased qubit, ordering spin (x) mode1 (x) mode2."""
    if spec.n2_max is None:
        raise ValueError("two-mode model needs BasisSpec.two_mode(n1_max, n2_max)")
    a1, ad1, num1 = ladder_operators(spec.n1_max)
    a2, ad2, num2 = ladder_operators(spec.n2_max)
    eye1, eye2 = np.eye(spec.n1_max), np.eye(spec.n2_max)
    sx, sz = pauli("x"), pauli("z")
    s_eye = np.eye(2)
    return (
        0.5 * cfg.delta * kron(sz, eye1, eye2)
        + 0.5 * cfg.epsilon * kron(sx, eye1, eye2)
        + cfg.omega1 * kron(s_eye, num1, eye2)
        + cfg.omega2 * kron(s_eye, eye1, num2)
        + cfg.g1 * kron(sx, a1 + ad1, eye2)
        + cfg.g2 * kron(sx, eye1, a2 + ad2)
    )


def build_two_qubit(cfg: ModelConfig, spec: BasisSpec) -> np.ndarray:
    """Two biased qubits sharing one mode, ordering qubit1 (x) qubit2 (x) Fock."""
    if spec.qubit_count != 2:
        raise ValueError("two-qubit model needs a BasisSpec with qubit_count=2")
    a, ad, num = ladder_operators(spec.n_max)
    eye_f = np.eye(spec.n_max)
    sx, sz = pauli("x"), pauli("z")
    s_eye = np.eye(2)
    x = a + ad
    return (
        0.5 * cfg.delta1 * kron(sz, s_eye, eye_f)
        + 0.5 * cfg.delta2 * kron(s_eye, sz, eye_f)
        + 0.5 * cfg.epsilon1 * kron(sx, s_eye, eye_f)
        + 0.5 * cfg.epsilon2 * kron(s_eye, sx, eye_f)
        + cfg.omega * kron(s_eye, s_eye, num)
        + cfg.g1 * kron(sx, s_eye, x)
        + cfg.g2 * kron(s_eye, sx, x)
    )


def build_hamiltonian(model: ModelId, cfg: ModelConfig, spec: BasisSpec) -> np.ndarray:
    """Dispatch to the family member's builder."""
    if model in SINGLE_MODE_MODELS:
        return build_single_mode(model, cfg, spec)
    if model is ModelId.TWO_MODE:
        return build_two_mode(cfg, spec)
    if model is ModelId.TWO_QUBIT:
        return build_two_qubit(cfg, spec)
    raise ValueError(f"unknown model {model}")


def epsilon_condition(model: ModelId, cfg: ModelConfig, n: int = 1) -> float:
    """n-th special bias value at which true level crossings occur.

    Returns n * eps_c with the model's unit condition eps_c listed in the
    module docstring.  The two-mode and two-qubit members have no known
    closed form and raise; probe them with the numerical scans instead.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n}")
    if model in (ModelId.QRM, ModelId.AQRM):
        return n * cfg.omega
    if model is ModelId.ARSM:
        return n * math.sqrt((cfg.omega - cfg.stark_u) * (cfg.omega + cfg.stark_u))
    if model is ModelId.ARSM_VARIANT_PLUS:
        return n * math.sqrt(cfg.omega * (cfg.omega + cfg.stark_u))
    if model is ModelId.ARSM_VARIANT_MINUS:
        return n * math.sqrt(cfg.omega * (cfg.omega - cfg.stark_u))
    if model is ModelId.ANISO_AQRM:
        if cfg.lam <= 0.0:
            raise ValueError(f"the anisotropic bias condition needs lam > 0, got {cfg.lam}")
        return n * 2.0 * math.sqrt(cfg.lam) / (1.0 + cfg.lam) * cfg.omega
    raise ValueError(f"no closed-form bias condition is known for {model}")


def rescale_offset(model: ModelId, cfg: ModelConfig, g: float) -> float:
    """Energy offset that straightens the spectrum onto flat large-g baselines.

    Plotted spectra show E + g^2/omega for the single-mode members, and
    E + (1 + lam^2) g1^2/omega for the anisotropic one (g is g1 there).
    """
    if model not in SINGLE_MODE_MODELS:
        raise ValueError(f"rescale_offset is defined for single-mode models, not {model}")
    if model is ModelId.ANISO_AQRM:
        return (1.0 + cfg.lam**2) * g * g / cfg.omega
    return g * g / cfg.omega
