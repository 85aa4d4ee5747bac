"""Spectral sweeps, gap refinement and crossing classification.

The observable that separates a true level crossing from an avoided one is
the minimum gap between adjacent sorted eigenvalues along a coupling sweep:
at the special bias values the gap closes to solver round-off and stays
closed as the truncation grows, while away from them it bottoms out at a
finite value.  Everything here works on the rescaled energies
E + offset(g) (flat large-g baselines) except where noted; gaps are
unaffected by the rescaling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .hilbert import BasisSpec
from .models import (
    SINGLE_MODE_MODELS,
    ModelConfig,
    ModelId,
    build_hamiltonian,
    rescale_offset,
)

__all__ = [
    "ConvergenceError",
    "EigenSystem",
    "SpectrumSweep",
    "GapMinimum",
    "CrossingRecord",
    "ConvergenceTable",
    "eigh",
    "sweep",
    "min_gap",
    "classify_crossing",
    "find_crossings",
    "scan_flat_levels",
    "convergence_check",
]

# Gap below which a refined, truncation-stable minimum counts as a crossing,
# in units of omega.
CROSSING_TOL = 1e-8
# Eigenvalue drift per truncation step below which a spectrum is converged,
# in units of omega.
CONVERGENCE_TOL = 1e-8
_GOLDEN_REL_TOL = 1e-10


class ConvergenceError(RuntimeError):
    """Raised when a result fails its truncation-convergence check."""


@dataclass(frozen=True)
class EigenSystem:
    """Ascending eigenvalues and matching orthonormal eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray


def eigh(h: np.ndarray) -> EigenSystem:
    """Symmetric eigensolver with a deterministic sign convention.

    Input must be exactly symmetric entrywise (every builder here
    guarantees that; near-symmetry is rejected rather than patched).  Each
    eigenvector is flipped so its largest-magnitude entry is positive,
    making repeated runs and cross-basis comparisons reproducible.
    """
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    if not (h == h.T).all():
        raise ValueError("matrix is not exactly symmetric")
    values, vectors = np.linalg.eigh(h)
    lead = np.abs(vectors).argmax(axis=0)
    signs = np.where(vectors[lead, np.arange(vectors.shape[1])] < 0.0, -1.0, 1.0)
    return EigenSystem(values=values, vectors=vectors * signs)


def _eigvals(h: np.ndarray) -> np.ndarray:
    if not (h == h.T).all():
        raise ValueError("matrix is not exactly symmetric")
    return np.linalg.eigvalsh(h)


def _config_at(model: ModelId, cfg: ModelConfig, g: float) -> ModelConfig:
    # One coupling axis for every family: g itself for the plain single-mode
    # members, g1 (with g2 = lam*g1 implied) for the anisotropic one, and
    # g1 = g2 = g for the two-mode/two-qubit scans.
    if model is ModelId.ANISO_AQRM:
        return replace(cfg, g1=g)
    if model in SINGLE_MODE_MODELS:
        return replace(cfg, g=g)
    return replace(cfg, g1=g, g2=g)


def _offset(model: ModelId, cfg: ModelConfig, g: float) -> float:
    if model in SINGLE_MODE_MODELS:
        return rescale_offset(model, cfg, g)
    return 0.0


@dataclass(frozen=True)
class SpectrumSweep:
    """Lowest-k rescaled energies along a coupling grid, one row per g."""

    model: ModelId
    cfg: ModelConfig
    spec: BasisSpec
    g_grid: np.ndarray
    energies: np.ndarray  # shape (len(g_grid), k), each row ascending


def sweep(
    model: ModelId,
    cfg: ModelConfig,
    g_min: float,
    g_max: float,
    steps: int,
    k: int,
    spec: BasisSpec,
) -> SpectrumSweep:
    """Diagonalize along np.linspace(g_min, g_max, steps), keep the lowest k.

    `steps` counts grid points (>= 2).  Deterministic: identical inputs
    produce bit-identical tables.
    """
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    if not g_max > g_min:
        raise ValueError(f"need g_max > g_min, got [{g_min}, {g_max}]")
    if k < 1 or k > spec.dim:
        raise ValueError(f"k must be in 1..{spec.dim}, got {k}")
    g_grid = np.linspace(g_min, g_max, steps)
    energies = np.empty((steps, k))
    for row, g in enumerate(g_grid):
        vals = _eigvals(build_hamiltonian(model, _config_at(model, cfg, g), spec))
        energies[row] = vals[:k] + _offset(model, cfg, g)
    return SpectrumSweep(model=model, cfg=cfg, spec=spec, g_grid=g_grid, energies=energies)


@dataclass(frozen=True)
class GapMinimum:
    """Result of a gap refinement; boundary=True flags a monotone gap whose
    minimum sits on an endpoint of the search interval."""

    g_star: float
    gap: float
    boundary: bool = False


def _pair_gap(model: ModelId, cfg: ModelConfig, pair: int, spec: BasisSpec, g: float) -> float:
    vals = _eigvals(build_hamiltonian(model, _config_at(model, cfg, g), spec))
    return float(vals[pair + 1] - vals[pair])


def min_gap(
    model: ModelId,
    cfg: ModelConfig,
    pair: int,
    g_lo: float,
    g_hi: float,
    spec: BasisSpec,
) -> GapMinimum:
    """Golden-section minimum of the (pair, pair+1) gap on [g_lo, g_hi].

    Derivative-free, robust at the |g - g*| kink of a true crossing.  The
    interval shrinks until it is below 1e-10 relative to the coupling
    scale; with a unimodal bracket this resolves the minimizer to that
    resolution.
    """
    if not g_hi > g_lo:
        raise ValueError(f"need g_hi > g_lo, got [{g_lo}, {g_hi}]")
    if pair < 0 or pair + 1 >= spec.dim:
        raise ValueError(f"pair must be in 0..{spec.dim - 2}, got {pair}")
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    tol = _GOLDEN_REL_TOL * max(1.0, abs(g_lo), abs(g_hi))
    a, b = g_lo, g_hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc = _pair_gap(model, cfg, pair, spec, c)
    fd = _pair_gap(model, cfg, pair, spec, d)
    while (b - a) > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = _pair_gap(model, cfg, pair, spec, c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = _pair_gap(model, cfg, pair, spec, d)
    g_star = c if fc < fd else d
    gap = min(fc, fd)
    # Endpoints can undercut the interior probes when the gap is monotone.
    boundary = False
    for g_end in (g_lo, g_hi):
        f_end = _pair_gap(model, cfg, pair, spec, g_end)
        if f_end < gap:
            g_star, gap, boundary = g_end, f_end, True
    return GapMinimum(g_star=g_star, gap=gap, boundary=boundary)


@dataclass(frozen=True)
class CrossingRecord:
    """A refined gap minimum and its verdict.

    refinement_trace holds the refined minimum gap at each truncation, in
    ascending truncation order; verdict is 'crossing' only if every entry
    is below crossing_tol and the trace does not grow under refinement.
    e_star is the rescaled energy at the (largest-truncation) minimum.
    """

    pair: tuple[int, int]
    g_star: float
    e_star: float
    min_gap: float
    verdict: str
    truncations: tuple[int, ...]
    refinement_trace: tuple[float, ...]


def _respec(spec: BasisSpec, n_max: int) -> BasisSpec:
    if spec.n2_max is not None:
        raise ValueError("truncation refinement over a single n_max needs a single-mode basis")
    return BasisSpec(n_max=n_max, qubit_count=spec.qubit_count)


def classify_crossing(
    model: ModelId,
    cfg: ModelConfig,
    pair: int,
    g_lo: float,
    g_hi: float,
    spec: BasisSpec,
    truncations: tuple[int, ...] | None = None,
    crossing_tol: float | None = None,
) -> CrossingRecord:
    """Refine a bracketed gap minimum at each truncation and classify it.

    A crossing must survive refinement: the gap stays below crossing_tol
    (default 1e-8 * omega) at every truncation in `truncations` (default
    (n_max, n_max + 40)) and does not grow along the trace beyond a small
    slack (a tenth of the tolerance) that covers solver round-off.
    Anything else is an avoided crossing.
    """
    if truncations is None:
        truncations = (spec.n_max, spec.n_max + 40)
    truncations = tuple(sorted(int(t) for t in truncations))
    if len(truncations) < 1:
        raise ValueError("need at least one truncation")
    tol = CROSSING_TOL * cfg.omega if crossing_tol is None else crossing_tol

    trace = []
    minima = []
    for n_max in truncations:
        result = min_gap(model, cfg, pair, g_lo, g_hi, _respec(spec, n_max))
        trace.append(result.gap)
        minima.append(result)
    below = all(gap < tol for gap in trace)
    non_increasing = all(trace[i + 1] <= trace[i] + 0.1 * tol for i in range(len(trace) - 1))
    verdict = "crossing" if below and non_increasing else "avoided"

    final = minima[-1]
    top_spec = _respec(spec, truncations[-1])
    vals = _eigvals(build_hamiltonian(model, _config_at(model, cfg, final.g_star), top_spec))
    e_star = 0.5 * (vals[pair] + vals[pair + 1]) + _offset(model, cfg, final.g_star)
    return CrossingRecord(
        pair=(pair, pair + 1),
        g_star=final.g_star,
        e_star=float(e_star),
        min_gap=final.gap,
        verdict=verdict,
        truncations=truncations,
        refinement_trace=tuple(trace),
    )


def find_crossings(
    model: ModelId,
    cfg: ModelConfig,
    g_min: float,
    g_max: float,
    steps: int,
    k: int,
    spec: BasisSpec,
    truncations: tuple[int, ...] | None = None,
    crossing_tol: float | None = None,
    pairs: list[int] | None = None,
) -> list[CrossingRecord]:
    """Locate and classify every interior gap minimum among the lowest k levels.

    A coarse sweep brackets each strict local minimum of each adjacent-pair
    gap (endpoints excluded, so degeneracies sitting exactly on the sweep
    boundary are not picked up); each bracket is then refined and
    classified.  `pairs` restricts the search to the given lower indices.
    Records are ordered by pair, then by g_star.
    """
    table = sweep(model, cfg, g_min, g_max, steps, k, spec)
    records = []
    for pair in pairs if pairs is not None else range(k - 1):
        if pair < 0 or pair + 1 >= k:
            raise ValueError(f"pair must be in 0..{k - 2}, got {pair}")
        gaps = table.energies[:, pair + 1] - table.energies[:, pair]
        for i in range(1, steps - 1):
            if gaps[i] < gaps[i - 1] and gaps[i] <= gaps[i + 1]:
                records.append(
                    classify_crossing(
                        model,
                        cfg,
                        pair,
                        float(table.g_grid[i - 1]),
                        float(table.g_grid[i + 1]),
                        spec,
                        truncations=truncations,
                        crossing_tol=crossing_tol,
                    )
                )
    return records


def scan_flat_levels(table: SpectrumSweep, tol: float | None = None) -> list[int]:
    """Indices of levels whose unrescaled energy is flat across the sweep.

    Flat means max - min below tol (default 1e-6 * omega) after removing
    the rescaling offset again.  Dark states of the identical-qubit
    two-qubit model show up here: their energies ride the bare ladder
    n * omega independently of the coupling.
    """
    if tol is None:
        tol = 1e-6 * table.cfg.omega
    offsets = np.array([_offset(table.model, table.cfg, g) for g in table.g_grid])
    bare = table.energies - offsets[:, None]
    span = bare.max(axis=0) - bare.min(axis=0)
    return [int(i) for i in np.nonzero(span < tol)[0]]


@dataclass(frozen=True)
class ConvergenceTable:
    """Lowest-k eigenvalues per truncation and the drift between steps."""

    truncations: tuple[int, ...]
    values: np.ndarray  # shape (len(truncations), k)
    drifts: np.ndarray  # shape (len(truncations) - 1,), max abs change per step
    tol: float

    @property
    def converged(self) -> bool:
        return bool(self.drifts.size == 0 or self.drifts[-1] < self.tol)


def convergence_check(
    model: ModelId,
    cfg: ModelConfig,
    g: float,
    k: int,
    truncations: tuple[int, ...],
    spec: BasisSpec | None = None,
) -> ConvergenceTable:
    """Track the lowest k eigenvalues as n_max grows.

    The spectrum counts as converged when the last drift is below
    1e-8 * omega.  Works on any family with a single Fock-truncation axis
    (two-mode bases have a pair of truncations and are out of scope here).
    """
    truncations = tuple(sorted(int(t) for t in truncations))
    if len(truncations) < 2:
        raise ValueError("need at least two truncations to measure drift")
    if spec is None:
        spec = BasisSpec(
            n_max=truncations[0],
            qubit_count=2 if model is ModelId.TWO_QUBIT else 1,
        )
    values = []
    for n_max in truncations:
        sub = _respec(spec, n_max)
        vals = _eigvals(build_hamiltonian(model, _config_at(model, cfg, g), sub))
        values.append(vals[:k])
    values = np.array(values)
    drifts = np.abs(np.diff(values, axis=0)).max(axis=1)
    return ConvergenceTable(
        truncations=truncations,
        values=values,
        drifts=drifts,
        tol=CONVERGENCE_TOL * cfg.omega,
    )
