"""Displaced-oscillator basis: overlaps, energies, tunnelling matrix.

Dropping the qubit splitting term (delta/2) sigma_z from the asymmetric
Rabi Hamiltonian leaves two independent oscillators, one per sigma_x
eigenvalue, displaced in opposite directions.  With alpha = g/omega and
D(b) = exp[b(a' - a)] their eigenstates and energies are

    |n_+-, +-> = D(-+alpha)|n> (x) |+->,   E_n^+- = n omega - g^2/omega +- eps/2.

Restoring (delta/2) sigma_z couples the two wells: it has no matrix element
between states of the same well (<+-|sigma_z|+-> = 0) and acts purely as a
tunnelling term.  In the ordered basis (|0_-,->, ..., |n_max-1_-,->,
|0_+,+>, ..., |n_max-1_+,+>) the Hamiltonian is

    [[ diag(E_m^-),  W        ],         W[m, n] = Omega_mn = <m_-,-| H_t |n_+,+>,
     [ W^T,          diag(E_n^+) ]]

with Omega_mn = (delta/2) <m_-|n_+> for the AQRM and an additional Stark
piece U <m_-|a'a|n_+> for the ARSM (whose U a'a sigma_z term is also purely
inter-well).  The displaced-state overlap has the closed form, for m >= n,

    <m_-|n_+> = exp(-2 alpha^2) (-2 alpha)^(m-n) sqrt(n!/m!) L_n^(m-n)(4 alpha^2),

extended to m < n by <m_-|n_+> = (-1)^(n-m) <n_-|m_+>.  Equivalently the
whole overlap table is the matrix of D(-2 alpha), which is how the
brute-force matrix-exponential route verifies the analytic one.

Degeneracies of the E_n^+- ladder at special bias values are what makes
level crossings and bias-selective tunnelling possible; see
:mod:`asymrabi.spectra` and :mod:`asymrabi.dynamics`.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.linalg import expm

from .hilbert import BasisSpec, ladder_operators
from .models import ModelConfig, ModelId

__all__ = [
    "laguerre_assoc",
    "displaced_overlap",
    "overlap_table",
    "displacement_operator_numeric",
    "displaced_energy",
    "tunneling_element",
    "build_displaced_matrix",
]

_DISPLACED_MODELS = frozenset({ModelId.QRM, ModelId.AQRM, ModelId.ARSM})


def laguerre_assoc(k: int, j: int, x: float) -> float:
    """Associated Laguerre polynomial L_k^j(x) by the three-term recurrence.

    L_0^j = 1, L_1^j = 1 + j - x,
    L_k^j = ((2k - 1 + j - x) L_{k-1}^j - (k - 1 + j) L_{k-2}^j) / k.

    Upward recurrence in the degree is stable for the small arguments
    x = 4 alpha^2 met here; the power-series definition serves as the
    independent check in the tests.
    """
    if int(k) != k or k < 0:
        raise ValueError(f"degree k must be an integer >= 0, got {k}")
    if int(j) != j or j < 0:
        raise ValueError(f"order j must be an integer >= 0, got {j}")
    if k == 0:
        return 1.0
    prev, curr = 1.0, 1.0 + j - x
    for i in range(2, k + 1):
        prev, curr = curr, ((2 * i - 1 + j - x) * curr - (i - 1 + j) * prev) / i
    return curr


def displaced_overlap(m: int, n: int, alpha: float) -> float:
    """Overlap <m_-|n_+> of counter-displaced Fock states.

    The closed form above, evaluated with the square-root factorial ratio
    folded into a running product (one factor -2 alpha / sqrt(i) per step),
    so nothing large is ever formed.  m < n goes through the reflection
    identity <m_-|n_+> = (-1)^(n-m) <n_-|m_+>.
    """
    if int(m) != m or m < 0 or int(n) != n or n < 0:
        raise ValueError(f"Fock labels must be integers >= 0, got ({m}, {n})")
    if m < n:
        sign = -1.0 if (n - m) % 2 else 1.0
        return sign * displaced_overlap(n, m, alpha)
    pref = math.exp(-2.0 * alpha * alpha)
    for i in range(n + 1, m + 1):
        pref *= -2.0 * alpha / math.sqrt(i)
    return pref * laguerre_assoc(n, m - n, 4.0 * alpha * alpha)


def overlap_table(alpha: float, n_max: int) -> np.ndarray:
    """(n_max, n_max) table T[m, n] = <m_-|n_+>.

    Same arithmetic as :func:`displaced_overlap`, organized diagonal by
    diagonal so each Laguerre degree advances once for every order j at a
    time; all partial factors stay O(1) in magnitude.  T is the matrix of
    D(-2 alpha) on the truncated space: orthogonal up to truncation loss in
    the last few rows and columns.
    """
    if int(n_max) != n_max or n_max < 2:
        raise ValueError(f"n_max must be an integer >= 2, got {n_max}")
    n_max = int(n_max)
    x = 4.0 * alpha * alpha
    jarr = np.arange(n_max, dtype=float)
    sign = np.where(np.arange(n_max) % 2 == 0, 1.0, -1.0)

    # exp(-2 alpha^2) * prod_{i=1..j} (-2 alpha)/sqrt(i), indexed by j
    pref = np.empty(n_max)
    pref[0] = math.exp(-2.0 * alpha * alpha)
    if n_max > 1:
        pref[1:] = pref[0] * np.cumprod(-2.0 * alpha / np.sqrt(jarr[1:]))

    table = np.empty((n_max, n_max))
    l_prev = np.zeros(n_max)  # degree k-1, all orders j
    l_curr = np.ones(n_max)   # degree k
    row_factor = pref.copy()  # pref * sqrt(k!/(k+j)!), advanced with k
    for k in range(n_max):
        count = n_max - k
        vals = row_factor[:count] * l_curr[:count]
        rows = np.arange(k, n_max)
        table[rows, k] = vals
        table[k, rows] = sign[:count] * vals
        keep = count - 1  # orders still needed at degree k+1
        if keep == 0:
            break
        l_next = np.zeros(n_max)
        l_next[:keep] = (
            (2 * k + 1 + jarr[:keep] - x) * l_curr[:keep] - (k + jarr[:keep]) * l_prev[:keep]
        ) / (k + 1)
        l_prev, l_curr = l_curr, l_next
        row_factor[:keep] = row_factor[:keep] * np.sqrt((k + 1.0) / (k + 1.0 + jarr[:keep]))
    return table


def displacement_operator_numeric(alpha: float, spec: BasisSpec | int) -> np.ndarray:
    """D(alpha) = exp[alpha (a' - a)] by direct matrix exponential.

    The brute-force route: no Laguerre machinery, just the truncated
    generator exponentiated by scaling-and-squaring.  D(-2 alpha) collects
    every displaced overlap at once, which is the oracle the analytic table
    is tested against.  The truncation must be generous because the
    exponential mixes states near the edge: n_max >= 16 alpha^2 + 60 is
    enforced so the retained block is converged.
    """
    n_max = spec.n_max if isinstance(spec, BasisSpec) else int(spec)
    floor = 16.0 * alpha * alpha + 60.0
    if n_max < floor:
        raise ValueError(
            f"truncation too small for |alpha| = {abs(alpha)}: need n_max >= {math.ceil(floor)}, got {n_max}"
        )
    a, ad, _ = ladder_operators(n_max)
    return expm(alpha * (ad - a))


def displaced_energy(n: int, branch: str, cfg: ModelConfig) -> float:
    """Ladder energy E_n^branch = n omega - g^2/omega +- eps/2, branch '+' or '-'."""
    if int(n) != n or n < 0:
        raise ValueError(f"n must be an integer >= 0, got {n}")
    if branch not in ("+", "-"):
        raise ValueError(f"branch must be '+' or '-', got {branch!r}")
    sign = 1.0 if branch == "+" else -1.0
    return n * cfg.omega - cfg.g**2 / cfg.omega + sign * 0.5 * cfg.epsilon


def _stark_number_overlap(m: int, n: int, alpha: float) -> float:
    # <m_-|a'a|n_+> expanded over neighbouring overlaps; terms that would
    # reference Fock label -1 drop out.
    total = -alpha * alpha * displaced_overlap(m, n, alpha)
    if n >= 1:
        total += alpha * math.sqrt(n) * displaced_overlap(m, n - 1, alpha)
    if m >= 1:
        total -= alpha * math.sqrt(m) * displaced_overlap(m - 1, n, alpha)
    if m >= 1 and n >= 1:
        total += math.sqrt(m * n) * displaced_overlap(m - 1, n - 1, alpha)
    return total


def tunneling_element(model: ModelId, m: int, n: int, cfg: ModelConfig) -> float:
    """Inter-well matrix element Omega_mn = <m_-,-| H_t |n_+,+>.

    AQRM (and the QRM, its zero-bias member): (delta/2) <m_-|n_+>.  ARSM
    adds U <m_-|a'a|n_+>, with

        <m_-|a'a|n_+> = alpha sqrt(n) <m|n-1> - alpha sqrt(m) <m-1|n>
                        + sqrt(m n) <m-1|n-1> - alpha^2 <m|n>

    (overlaps abbreviated; negative labels dropped).
    """
    if model not in _DISPLACED_MODELS:
        raise ValueError(f"displaced-basis treatment covers QRM/AQRM/ARSM, not {model}")
    alpha = cfg.g / cfg.omega
    elem = 0.5 * cfg.delta * displaced_overlap(m, n, alpha)
    if model is ModelId.ARSM:
        elem += cfg.stark_u * _stark_number_overlap(m, n, alpha)
    return elem


def build_displaced_matrix(model: ModelId, cfg: ModelConfig, n_max: int) -> np.ndarray:
    """Full Hamiltonian in the displaced basis, shape (2 n_max, 2 n_max).

    Minus-well states first, then plus-well states; diagonal blocks are the
    ladder energies, the off-diagonal block is the tunnelling matrix W with
    W[m, n] = Omega_mn.  Exactly symmetric by construction.  Eigenvalues
    agree with the Fock-basis build of the same model once both truncations
    are converged, which is the cross-basis regression in the tests.
    """
    if model not in _DISPLACED_MODELS:
        raise ValueError(f"displaced-basis treatment covers QRM/AQRM/ARSM, not {model}")
    if model is ModelId.QRM and cfg.epsilon != 0.0:
        raise ValueError("the QRM has zero bias; use AQRM for epsilon != 0")
    if int(n_max) != n_max or n_max < 2:
        raise ValueError(f"n_max must be an integer >= 2, got {n_max}")
    n_max = int(n_max)
    alpha = cfg.g / cfg.omega
    table = overlap_table(alpha, n_max)
    w = 0.5 * cfg.delta * table
    if model is ModelId.ARSM:
        root = np.sqrt(np.arange(float(n_max)))
        stark = -alpha * alpha * table
        stark[:, 1:] += alpha * root[1:][None, :] * table[:, :-1]
        stark[1:, :] -= alpha * root[1:][:, None] * table[:-1, :]
        stark[1:, 1:] += np.outer(root[1:], root[1:]) * table[:-1, :-1]
        w = w + cfg.stark_u * stark

    ladder = np.arange(n_max) * cfg.omega - cfg.g**2 / cfg.omega
    h = np.zeros((2 * n_max, 2 * n_max))
    h[:n_max, :n_max] = np.diag(ladder - 0.5 * cfg.epsilon)
    h[n_max:, n_max:] = np.diag(ladder + 0.5 * cfg.epsilon)
    h[:n_max, n_max:] = w
    h[n_max:, :n_max] = w.T
    return h
