// Python bindings for the main qwalk operations: root-return amplitudes by
// direct simulation and by series inversion, the asymptotic model, the
// classical benchmark, and the scaling-fit helpers.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qwalk/asymptotics.hpp"
#include "qwalk/btree.hpp"
#include "qwalk/classical.hpp"
#include "qwalk/cli.hpp"
#include "qwalk/series.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coinless binary-tree quantum walk: root-return statistics";

  py::register_exception<qwalk::error>(m, "QwalkError", PyExc_RuntimeError);

  m.def("simulate_projected", &qwalk::btree::simulate_projected,
        py::arg("n"), py::arg("t_max"),
        "Root-return amplitudes H_n(t), t = 0..t_max, via the exact "
        "symmetry-projected line walk");
  m.def("simulate_tree",
        [](int n, int t_max) { return qwalk::btree::simulate_tree(n, t_max); },
        py::arg("n"), py::arg("t_max"),
        "Root-return amplitudes by full sparse tree evolution (small t only)");
  m.def("amplitude_sequence", &qwalk::series::amplitude_sequence,
        py::arg("n"), py::arg("order"),
        "Root-return amplitudes via generating-function inversion");
  m.def("loop_coefficients",
        [](int order) { return qwalk::series::g_hat(order).coeffs; },
        py::arg("order"),
        "Taylor coefficients of the first-return loop generating function");
  m.def("narayana", &qwalk::series::narayana, py::arg("m"), py::arg("k"),
        "Narayana number N(m, k), exact");
  m.def("asymptotic_amplitude", &qwalk::asymptotics::asymptotic_amplitude,
        py::arg("n"), py::arg("t"),
        "Uniform saddle-point model of H_n(t) for t > n");
  m.def("asymptotic_probability", &qwalk::asymptotics::asymptotic_probability,
        py::arg("n"), py::arg("t"));
  m.def("bound_state_amplitude", &qwalk::asymptotics::bound_state_amplitude,
        py::arg("n"), py::arg("t"),
        "Non-decaying unit-circle-pole component of H_n(t)");
  m.def("hit_probability",
        [](int n, int t) {
          return qwalk::classical::hit_probability(n, t, qwalk::classical::ChainParams{});
        },
        py::arg("n"), py::arg("t"),
        "Classical root-occupancy probability p_t(n, 0) by spectral integral");
  m.def("chain_dp",
        [](int n, int t_max) {
          return qwalk::classical::chain_dp(n, t_max, qwalk::classical::ChainParams{});
        },
        py::arg("n"), py::arg("t_max"),
        "Classical root-occupancy probabilities by exact forward propagation");
  m.def("classical_peak",
        [](int n) {
          return qwalk::classical::classical_peak(n, qwalk::classical::ChainParams{});
        },
        py::arg("n"), "Peak (t_star, p_star) of the classical root occupancy");
  m.def("runtime_estimate", &qwalk::cli::runtime_estimate, py::arg("probs"),
        "Best (t, t/p) run-time estimate over a (t, p) sequence");
  m.def("fit_scaling",
        [](const std::vector<std::pair<double, double>>& points, double window_frac) {
          const auto fit = qwalk::cli::fit_scaling(points, window_frac);
          return py::make_tuple(fit.slope, fit.intercept, fit.power_slope,
                                fit.power_intercept);
        },
        py::arg("points"), py::arg("window_frac") = 0.25,
        "Trailing-window fit of ln(runtime): returns (slope, intercept, "
        "power_slope, power_intercept)");
}
