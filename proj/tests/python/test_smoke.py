"""Smoke tests for the python bindings: one check per exposed operation."""

import cmath
import math

import pytest

import qwalk


SQRT3 = math.sqrt(3.0)
A = complex(-0.5, SQRT3 / 2.0)


def test_simulators_agree():
    full = qwalk.simulate_tree(3, 12)
    proj = qwalk.simulate_projected(3, 12)
    ser = qwalk.amplitude_sequence(3, 12)
    for t in range(13):
        assert abs(full[t] - proj[t]) < 1e-12
        assert abs(full[t] - ser[t]) < 1e-12


def test_first_arrival_amplitude():
    amps = qwalk.simulate_projected(5, 5)
    assert abs(amps[5] - (A / SQRT3) ** 5) < 1e-13


def test_loop_coefficients():
    g = qwalk.loop_coefficients(4)
    assert abs(g[2] - 1.0 / SQRT3) < 1e-15
    assert abs(g[4] - 2.0 * A * A / (3.0 * SQRT3)) < 1e-15


def test_narayana():
    assert qwalk.narayana(4, 2) == 6
    with pytest.raises(qwalk.QwalkError):
        qwalk.narayana(3, 5)


def test_asymptotic_matches_series():
    t = 50 + 500
    exact = abs(qwalk.amplitude_sequence(50, t)[t]) ** 2
    model = qwalk.asymptotic_probability(50, t)
    assert abs(model - exact) / exact < 1e-3
    amp = qwalk.asymptotic_amplitude(50, t)
    assert abs(abs(amp) ** 2 - model) <= 1e-12 * model


def test_bound_state_decays_with_n():
    b6 = abs(qwalk.bound_state_amplitude(6, 6 + 200))
    b10 = abs(qwalk.bound_state_amplitude(10, 10 + 200))
    assert b10 < b6


def test_classical_routes_agree():
    dp = qwalk.chain_dp(10, 60)
    assert abs(qwalk.hit_probability(10, 22) - dp[22]) < 1e-12
    assert sum(dp) <= 1.0 + 1e-12


def test_classical_peak_law():
    t_star, p_star = qwalk.classical_peak(20)
    assert t_star == 3 * 20 - 8
    assert p_star == pytest.approx(7.69444359904598785e-08, rel=1e-12)


def test_runtime_estimate():
    t_best, runtime = qwalk.runtime_estimate([(10, 0.5), (20, 0.5), (30, 0.9)])
    assert t_best == 10
    assert runtime == pytest.approx(20.0)


def test_fit_scaling_exact_exponential():
    points = [(float(n), math.exp(0.7 * n)) for n in range(10, 110, 10)]
    slope, _, _, _ = qwalk.fit_scaling(points)
    assert slope == pytest.approx(0.7, abs=1e-10)
