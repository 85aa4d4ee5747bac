import math

import numpy as np
import pytest

from asymrabi import (
    ModelConfig,
    ModelId,
    epsilon_condition,
    evolve,
    population_trace,
    three_level_hamiltonian,
    tunneling_frequencies,
    two_level_populations,
)


def test_evolve_matches_two_level_closed_form():
    # independent check: 2x2 evolution against the analytic channel formula
    delta, rabi = 0.3, 0.12
    h = np.array([[0.5 * delta, rabi], [rabi, -0.5 * delta]])
    times = np.linspace(0.0, 40.0, 200)
    states = evolve(h, np.array([1.0, 0.0]), times)
    p_stay, p_go = two_level_populations(times, delta, rabi)
    assert np.abs(np.abs(states[:, 0]) ** 2 - p_stay).max() < 1e-12
    assert np.abs(np.abs(states[:, 1]) ** 2 - p_go).max() < 1e-12


def test_evolve_contract():
    rng = np.random.default_rng(13)
    m = rng.normal(size=(12, 12))
    h = m + m.T
    psi0 = rng.normal(size=12)
    psi0 /= np.linalg.norm(psi0)
    times = np.linspace(0.0, 5.0, 50)
    states = evolve(h, psi0, times)
    assert states.shape == (50, 12)
    assert np.allclose(states[0], psi0, atol=1e-12)
    norms = np.linalg.norm(states, axis=1)
    assert np.abs(norms - 1.0).max() < 1e-12
    energies = np.einsum("ti,ti->t", states.conj(), states @ h).real
    assert np.abs(energies - energies[0]).max() < 1e-11 * np.abs(h).max()
    with pytest.raises(ValueError):
        evolve(h, psi0 * 2.0, times)
    with pytest.raises(ValueError):
        evolve(h, psi0[:5], times)


def test_two_level_populations_sum_to_one():
    rng = np.random.default_rng(31)
    times = np.linspace(0.0, 30.0, 77)
    for _ in range(10):
        delta, rabi = float(rng.uniform(-1, 1)), float(rng.uniform(0, 0.5))
        p_stay, p_go = two_level_populations(times, delta, rabi)
        assert np.abs(p_stay + p_go - 1.0).max() < 1e-14
    # resonant channel transfers completely
    _, p_go = two_level_populations(np.array([math.pi / (2 * 0.2)]), 0.0, 0.2)
    assert p_go[0] == pytest.approx(1.0, abs=1e-12)
    # silent channel never moves
    p_stay, p_go = two_level_populations(times, 0.0, 0.0)
    assert np.all(p_stay == 1.0) and np.all(p_go == 0.0)


def test_tunneling_frequencies_zero_bias():
    cfg = ModelConfig(delta=0.1, omega=1.0, g=1.0, epsilon=0.0)
    freqs = tunneling_frequencies(cfg)
    rabi00 = 0.05 * math.exp(-2.0)
    assert freqs.delta00 == 0.0
    assert freqs.delta01 == 1.0
    assert freqs.omega00 == pytest.approx(rabi00, rel=1e-13)
    assert freqs.omega_u == pytest.approx(rabi00, rel=1e-13)
    # 2 pi / (0.05 e^-2) = 40 pi e^2
    assert freqs.period_T == pytest.approx(40.0 * math.pi * math.e**2, rel=1e-12)


def test_tunneling_frequencies_matched_bias():
    cfg = ModelConfig(delta=0.1, omega=1.0, g=1.0, epsilon=1.0)
    freqs = tunneling_frequencies(cfg)
    assert freqs.delta01 == 0.0
    assert freqs.omega_u == pytest.approx(freqs.omega01, rel=1e-13)
    rabi01 = abs(0.05 * (-2.0) * math.exp(-2.0))  # |<1-|0+>| channel element
    assert freqs.omega01 == pytest.approx(rabi01, rel=1e-12)


def test_tunneling_frequencies_interpolates():
    lo = tunneling_frequencies(ModelConfig(delta=0.1, g=1.0, epsilon=0.0))
    hi = tunneling_frequencies(ModelConfig(delta=0.1, g=1.0, epsilon=1.0))
    mid = tunneling_frequencies(ModelConfig(delta=0.1, g=1.0, epsilon=0.4))
    expected = 0.6 * mid.omega00 + 0.4 * mid.omega01
    assert mid.omega_u == pytest.approx(expected, rel=1e-13)
    assert lo.omega_u == lo.omega00
    assert hi.omega_u == hi.omega01


def test_tunneling_frequencies_warns_outside_cycle():
    cfg = ModelConfig(delta=0.8, omega=1.0, g=1.0, stark_u=0.5)
    eps_c = epsilon_condition(ModelId.ARSM, cfg)
    loud = ModelConfig(delta=0.8, g=1.0, stark_u=0.5, epsilon=1.15 * eps_c)
    with pytest.warns(UserWarning, match="clamped"):
        freqs = tunneling_frequencies(loud, ModelId.ARSM)
    # clamped at the top of the cycle
    assert freqs.omega_u == pytest.approx(freqs.omega01, rel=1e-13)


def test_tunneling_frequencies_arsm_uses_its_own_unit():
    cfg = ModelConfig(delta=0.8, omega=1.0, g=1.0, stark_u=0.5)
    eps_c = epsilon_condition(ModelId.ARSM, cfg)
    at_cond = ModelConfig(delta=0.8, g=1.0, stark_u=0.5, epsilon=eps_c)
    freqs = tunneling_frequencies(at_cond, ModelId.ARSM)
    assert freqs.omega_u == pytest.approx(freqs.omega01, rel=1e-13)
    with pytest.raises(ValueError):
        tunneling_frequencies(cfg, ModelId.TWO_MODE)


def test_three_level_structure():
    cfg = ModelConfig(delta=0.1, omega=1.0, g=1.0, epsilon=0.5)
    h = three_level_hamiltonian(cfg)
    assert h.shape == (3, 3)
    assert (h == h.T).all()
    assert h[1, 2] == 0.0  # the two minus-well states do not talk directly
    # diagonal carries the displaced energies relative to |0+,+>
    assert h[1, 1] - h[0, 0] == pytest.approx(-cfg.epsilon, rel=1e-13)
    assert h[2, 2] - h[0, 0] == pytest.approx(cfg.omega - cfg.epsilon, rel=1e-13)


def test_three_level_tracks_full_evolution():
    cfg = ModelConfig(delta=0.1, omega=1.0, g=1.0, epsilon=0.5)
    trace = population_trace(ModelId.AQRM, cfg, n_max=100, t_max_in_T=1.0, steps=400)
    h3 = three_level_hamiltonian(cfg)
    states = evolve(h3, np.array([1.0, 0.0, 0.0]), trace.times * trace.frequencies.period_T)
    p0p = np.abs(states[:, 0]) ** 2
    p0m = np.abs(states[:, 1]) ** 2
    p1m = np.abs(states[:, 2]) ** 2
    assert np.abs(p0p - trace.populations[:, 0]).max() < 0.03
    assert np.abs(p0m - trace.populations[:, 1]).max() < 0.03
    assert np.abs(p1m - trace.populations[:, 3]).max() < 0.03


def test_population_trace_contract():
    cfg = ModelConfig(delta=0.1, omega=1.0, g=1.0, epsilon=0.0)
    trace = population_trace(ModelId.AQRM, cfg, n_max=80, t_max_in_T=0.5, steps=101)
    assert trace.labels == ("0+", "0-", "1+", "1-")
    assert trace.populations.shape == (101, 4)
    assert trace.times[0] == 0.0 and trace.times[-1] == 0.5
    # starts fully in |0+,+>
    assert trace.populations[0, 0] == pytest.approx(1.0, abs=1e-12)
    assert np.all(trace.populations >= 0.0)
    assert np.all(trace.populations.sum(axis=1) <= 1.0 + 1e-12)
    assert trace.norm_error < 1e-10
    assert trace.energy_drift < 1e-9 * trace.h_norm
    with pytest.raises(ValueError):
        population_trace(ModelId.AQRM, cfg, n_max=80, steps=1)
    with pytest.raises(ValueError):
        population_trace(ModelId.ANISO_AQRM, cfg)


def test_population_trace_selective_transfer():
    # zero bias: the resonant 0-0 channel empties |0+,+> into |0-,->
    cfg = ModelConfig(delta=0.1, omega=1.0, g=1.0, epsilon=0.0)
    trace = population_trace(ModelId.AQRM, cfg, n_max=100, t_max_in_T=1.0, steps=600)
    assert trace.populations[:, 1].max() > 0.95
    assert trace.populations[:, 3].max() < 0.05
