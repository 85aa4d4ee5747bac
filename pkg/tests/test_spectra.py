import math

import numpy as np
import pytest

from asymrabi import (
    BasisSpec,
    ModelConfig,
    ModelId,
    build_single_mode,
    classify_crossing,
    convergence_check,
    eigh,
    find_crossings,
    min_gap,
    scan_flat_levels,
    sweep,
)


def test_eigh_contract():
    rng = np.random.default_rng(17)
    m = rng.normal(size=(40, 40))
    h = m + m.T
    system = eigh(h)
    assert np.all(np.diff(system.values) >= 0.0)
    residual = h @ system.vectors - system.vectors * system.values
    assert np.abs(residual).max() < 1e-10 * np.linalg.norm(h)
    # sign convention: largest-magnitude entry of each vector is positive
    lead = np.abs(system.vectors).argmax(axis=0)
    picked = system.vectors[lead, np.arange(40)]
    assert np.all(picked > 0.0)
    with pytest.raises(ValueError):
        eigh(m)  # not symmetric


def test_eigh_deterministic():
    rng = np.random.default_rng(4)
    m = rng.normal(size=(30, 30))
    h = m + m.T
    s1, s2 = eigh(h), eigh(h.copy())
    assert np.array_equal(s1.values, s2.values)
    assert np.array_equal(s1.vectors, s2.vectors)


def test_sweep_shape_and_rescaling():
    cfg = ModelConfig(delta=1.0, omega=1.0, epsilon=0.4)
    spec = BasisSpec(n_max=60)
    table = sweep(ModelId.AQRM, cfg, 0.0, 1.0, 11, 5, spec)
    assert table.energies.shape == (11, 5)
    assert np.array_equal(table.g_grid, np.linspace(0.0, 1.0, 11))
    assert np.all(np.diff(table.energies, axis=1) >= 0.0)
    # at g = 0 the rescaled energies are the bare qubit+oscillator levels
    half = 0.5 * math.hypot(1.0, 0.4)
    expected = np.sort([s * half + n for s in (-1, 1) for n in range(4)])[:5]
    assert np.allclose(table.energies[0], expected, atol=1e-10)


def test_sweep_deterministic_and_validated():
    cfg = ModelConfig(delta=0.5)
    spec = BasisSpec(n_max=40)
    t1 = sweep(ModelId.QRM, cfg, 0.1, 0.9, 7, 4, spec)
    t2 = sweep(ModelId.QRM, cfg, 0.1, 0.9, 7, 4, spec)
    assert np.array_equal(t1.energies, t2.energies)
    with pytest.raises(ValueError):
        sweep(ModelId.QRM, cfg, 0.1, 0.9, 1, 4, spec)
    with pytest.raises(ValueError):
        sweep(ModelId.QRM, cfg, 0.9, 0.1, 7, 4, spec)
    with pytest.raises(ValueError):
        sweep(ModelId.QRM, cfg, 0.1, 0.9, 7, 100, spec)


def test_sweep_g_axis_meaning_per_family():
    # single-mode: g; anisotropic: g1 with g2 = lam * g1.  At lam = 1 the
    # operators coincide but the rescaling conventions differ: g^2/omega
    # for the plain family, (1 + lam^2) g1^2/omega for the anisotropic one.
    spec = BasisSpec(n_max=50)
    iso = sweep(
        ModelId.ANISO_AQRM,
        ModelConfig(delta=0.8, lam=1.0, epsilon=0.2),
        0.0, 0.6, 4, 4, spec,
    )
    plain = sweep(
        ModelId.AQRM, ModelConfig(delta=0.8, epsilon=0.2), 0.0, 0.6, 4, 4, spec
    )
    extra = (iso.g_grid**2)[:, None]
    assert np.allclose(iso.energies, plain.energies + extra, atol=1e-12)


def test_min_gap_resolves_crossing():
    cfg = ModelConfig(delta=0.5, omega=1.0)
    spec = BasisSpec(n_max=100)
    result = min_gap(ModelId.AQRM, cfg, 2, 0.45, 0.52, spec)
    assert not result.boundary
    assert result.gap < 1e-10
    closed_form = math.sqrt(1.0 - 0.25**2) / 2.0
    assert result.g_star == pytest.approx(closed_form, abs=5e-9)


def test_min_gap_boundary_flag():
    # ground-pair gap decreases monotonically here: minimum sits on the edge
    cfg = ModelConfig(delta=0.5, omega=1.0)
    spec = BasisSpec(n_max=80)
    result = min_gap(ModelId.QRM, cfg, 0, 0.2, 0.6, spec)
    assert result.boundary
    assert result.g_star == 0.6
    assert result.gap == pytest.approx(0.2343, abs=2e-3)
    with pytest.raises(ValueError):
        min_gap(ModelId.QRM, cfg, 0, 0.6, 0.2, spec)
    with pytest.raises(ValueError):
        min_gap(ModelId.QRM, cfg, -1, 0.2, 0.6, spec)


def test_classify_crossing_true_crossing():
    cfg = ModelConfig(delta=0.5, omega=1.0)
    spec = BasisSpec(n_max=90)
    rec = classify_crossing(
        ModelId.AQRM, cfg, 2, 0.45, 0.52, spec, truncations=(90, 120)
    )
    assert rec.verdict == "crossing"
    assert rec.pair == (2, 3)
    assert rec.truncations == (90, 120)
    assert len(rec.refinement_trace) == 2
    assert max(rec.refinement_trace) < 1e-8
    assert rec.e_star == pytest.approx(1.0, abs=1e-6)
    assert rec.g_star == pytest.approx(math.sqrt(0.9375) / 2.0, abs=5e-9)


def test_classify_crossing_avoided():
    # with bias off the special values every near-degeneracy stays open
    cfg = ModelConfig(delta=0.5, omega=1.0, epsilon=0.3)
    spec = BasisSpec(n_max=80)
    recs = find_crossings(
        ModelId.AQRM, cfg, 0.02, 1.2, 121, 6, spec, truncations=(80, 110)
    )
    assert recs, "expected at least one refined gap minimum"
    assert all(r.verdict == "avoided" for r in recs)
    assert all(r.min_gap > 1e-3 for r in recs)


def test_find_crossings_first_baseline_matches_closed_form():
    cfg = ModelConfig(delta=0.5, omega=1.0)
    spec = BasisSpec(n_max=80)
    recs = find_crossings(
        ModelId.AQRM, cfg, 0.02, 1.2, 121, 6, spec, truncations=(80, 110)
    )
    crossings = [r for r in recs if r.verdict == "crossing"]
    assert len(crossings) == 3
    first = [r for r in crossings if abs(r.e_star - 1.0) < 1e-3]
    assert len(first) == 1
    closed_form = math.sqrt(1.0 - 0.25**2) / 2.0
    assert first[0].g_star == pytest.approx(closed_form, abs=1e-9)
    assert first[0].pair == (2, 3)


def test_find_crossings_stable_under_grid_doubling():
    cfg = ModelConfig(delta=0.5, omega=1.0, epsilon=1.0)
    spec = BasisSpec(n_max=70)
    kwargs = dict(k=4, spec=spec, truncations=(70, 95))
    coarse = find_crossings(ModelId.AQRM, cfg, 0.02, 1.0, 81, **kwargs)
    fine = find_crossings(ModelId.AQRM, cfg, 0.02, 1.0, 161, **kwargs)

    def key(recs):
        return sorted((r.pair, r.verdict, round(r.g_star, 6)) for r in recs)

    assert key(coarse) == key(fine)


def test_find_crossings_pair_filter():
    cfg = ModelConfig(delta=0.5, omega=1.0)
    spec = BasisSpec(n_max=70)
    recs = find_crossings(
        ModelId.AQRM, cfg, 0.02, 1.0, 81, 6, spec, truncations=(70, 95), pairs=[2]
    )
    assert all(r.pair == (2, 3) for r in recs)
    with pytest.raises(ValueError):
        find_crossings(
            ModelId.AQRM, cfg, 0.02, 1.0, 81, 6, spec, truncations=(70,), pairs=[9]
        )


def test_scan_flat_levels_two_qubit_dark_states():
    # identical qubits, zero bias: coupling-independent ladder lines appear
    spec = BasisSpec(n_max=60, qubit_count=2)
    cfg = ModelConfig(delta1=1.0, delta2=1.0, omega=1.0)
    table = sweep(ModelId.TWO_QUBIT, cfg, 0.38, 0.42, 5, 6, spec)
    flat = scan_flat_levels(table, tol=1e-6)
    assert flat, "identical-qubit model must expose flat levels"
    bare = table.energies[:, flat]
    # flat levels ride the bare oscillator ladder n * omega
    for col in range(bare.shape[1]):
        level = bare[0, col]
        assert abs(level - round(level)) < 1e-6
        assert np.abs(bare[:, col] - level).max() < 1e-6


def test_scan_flat_levels_persist_at_equal_bias():
    spec = BasisSpec(n_max=60, qubit_count=2)
    cfg = ModelConfig(delta1=1.0, delta2=1.0, epsilon1=0.2, epsilon2=0.2)
    table = sweep(ModelId.TWO_QUBIT, cfg, 0.38, 0.42, 5, 6, spec)
    assert scan_flat_levels(table, tol=1e-6)


def test_scan_flat_levels_empty_and_tolerance():
    spec = BasisSpec(n_max=50)
    cfg = ModelConfig(delta=1.0, epsilon=0.0)
    table = sweep(ModelId.QRM, cfg, 0.1, 0.5, 5, 4, spec)
    assert scan_flat_levels(table) == []
    assert scan_flat_levels(table, tol=np.inf) == [0, 1, 2, 3]


def test_convergence_check():
    cfg = ModelConfig(delta=1.0, omega=1.0, epsilon=0.3, g=0.0)
    table = convergence_check(ModelId.AQRM, cfg, 1.2, 6, (60, 100, 140))
    assert table.values.shape == (3, 6)
    assert table.drifts.shape == (2,)
    assert table.drifts[1] <= table.drifts[0]
    assert table.converged
    bad = convergence_check(ModelId.AQRM, cfg, 1.2, 6, (8, 12))
    assert not bad.converged
    with pytest.raises(ValueError):
        convergence_check(ModelId.AQRM, cfg, 1.2, 6, (100,))


def test_weyl_bound_on_qubit_splitting():
    # the qubit term has norm Delta/2, so no eigenvalue may move further
    rng = np.random.default_rng(29)
    spec = BasisSpec(n_max=40)
    for _ in range(5):
        delta = float(rng.uniform(0.1, 1.5))
        cfg = ModelConfig(delta=delta, g=float(rng.uniform(0.0, 1.0)),
                          epsilon=float(rng.uniform(0.0, 1.0)))
        cfg0 = ModelConfig(delta=0.0, g=cfg.g, epsilon=cfg.epsilon)
        vals = np.linalg.eigvalsh(build_single_mode(ModelId.AQRM, cfg, spec))
        vals0 = np.linalg.eigvalsh(build_single_mode(ModelId.AQRM, cfg0, spec))
        assert np.abs(vals - vals0).max() <= 0.5 * delta + 1e-12
