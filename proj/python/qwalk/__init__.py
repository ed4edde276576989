"""Coinless binary-tree quantum walk: root-return statistics.

Thin python surface over the C++ core: root-return amplitudes by direct
simulation and generating-function inversion, the saddle-point asymptotic
model, the exact classical benchmark, and run-time scaling fits.
"""

from ._core import (
    QwalkError,
    amplitude_sequence,
    asymptotic_amplitude,
    asymptotic_probability,
    bound_state_amplitude,
    chain_dp,
    classical_peak,
    fit_scaling,
    hit_probability,
    loop_coefficients,
    narayana,
    runtime_estimate,
    simulate_projected,
    simulate_tree,
)

__all__ = [
    "QwalkError",
    "amplitude_sequence",
    "asymptotic_amplitude",
    "asymptotic_probability",
    "bound_state_amplitude",
    "chain_dp",
    "classical_peak",
    "fit_scaling",
    "hit_probability",
    "loop_coefficients",
    "narayana",
    "runtime_estimate",
    "simulate_projected",
    "simulate_tree",
]
