#include "qwalk/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qwalk::classical {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Legendre nodes and weights on [-1, 1], computed once by Newton
// iteration on the three-term recurrence (machine precision for small n).
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

GaussRule gauss_legendre(int n) {
  GaussRule rule;
  rule.x.resize(static_cast<std::size_t>(n));
  rule.w.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.x[static_cast<std::size_t>(i)] = x;
    rule.w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& panel_rule() {
  static const GaussRule rule = gauss_legendre(16);
  return rule;
}

// Panel edges on [0, pi], graded geometrically away from both endpoints
// (the (R cos theta)^t mass concentrates there over a width ~ 1/sqrt(t)),
// with the panel width capped so one 16-point panel never spans more than
// ~2.5 oscillation wavelengths of e^{i n theta}.
std::vector<double> graded_edges(int n, int t, int split) {
  const double w_osc = 5.0 * kPi / std::max(n, 8);
  const double h0 = std::min({w_osc, 1.0 / std::sqrt(t + 1.0), kPi / 8.0}) / split;
  const double h_cap = std::min(w_osc, kPi / 8.0) / split;
  std::vector<double> left{0.0};
  double x = 0.0, h = h0;
  while (x + h < kPi / 2.0) {
    x += h;
    left.push_back(x);
    h = std::min(2.0 * h, h_cap);
  }
  left.push_back(kPi / 2.0);
  std::vector<double> edges = left;
  for (auto it = left.rbegin() + 1; it != left.rend(); ++it) {
    edges.push_back(kPi - *it);
  }
  return edges;
}

struct IntegralEstimate {
  std::complex<double> value;
  double abs_scale;  // integral of |integrand|: the cancellation ceiling
};

IntegralEstimate integral_estimate(int n, int t, const ChainParams& params,
                                   int split) {
  const double q = params.q;
  const double big_r = 2.0 * std::sqrt(params.p * q);
  const double r = std::sqrt(q / params.p);
  const GaussRule& rule = panel_rule();
  const std::vector<double> edges = graded_edges(n, t, split);
  std::complex<double> total{0.0, 0.0};
  double abs_total = 0.0;
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const double a = edges[e], b = edges[e + 1];
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double theta = 0.5 * (b - a) * rule.x[i] + 0.5 * (a + b);
      const double weight = 0.5 * (b - a) * rule.w[i];
      const double lambda = big_r * std::cos(theta);
      const std::complex<double> rho1 = r * std::exp(std::complex<double>{0.0, theta});
      const std::complex<double> rho2 = std::conj(rho1);
      const std::complex<double> bracket =
          std::pow(rho2, n) / (rho2 - lambda) - std::pow(rho1, n) / (rho1 - lambda);
      // lambda = R cos(theta) decreases over [0, pi]; the orientation sign is
      // absorbed into d lambda = R sin(theta) d theta.
      const std::complex<double> term =
          weight * std::pow(lambda, t) * bracket * (big_r * std::sin(theta));
      total += term;
      abs_total += std::abs(term);
    }
  }
  const double two_pi = 2.0 * kPi;
  return {total / std::complex<double>{0.0, two_pi}, abs_total / two_pi};
}

}  // namespace

ChainParams ChainParams::make(double p_away) {
  if (!(p_away > 0.5 && p_away < 1.0)) {
    throw parameter_error("ChainParams: away probability must lie in (1/2, 1) "
                          "(transient regime), got " + std::to_string(p_away));
  }
  ChainParams params;
  params.p = p_away;
  params.q = 1.0 - p_away;
  return params;
}

std::pair<std::complex<double>, std::complex<double>> rho_roots(double lambda,
                                                                const ChainParams& params) {
  const std::complex<double> disc =
      std::sqrt(std::complex<double>{lambda * lambda - 4.0 * params.p * params.q, 0.0});
  const std::complex<double> rho1 = (lambda + disc) / (2.0 * params.p);
  const std::complex<double> rho2 = (lambda - disc) / (2.0 * params.p);
  return {rho1, rho2};
}

double spectral_density(double x, const ChainParams& params) {
  const double support = 4.0 * params.p * params.q - x * x;
  if (support <= 0.0) return 0.0;
  return std::sqrt(support) / (2.0 * kPi * params.q * (1.0 - x * x));
}

double hit_probability(int n, int t, const ChainParams& params) {
  if (n < 0 || t < 0) {
    throw parameter_error("hit_probability: need n >= 0 and t >= 0");
  }
  // Cancellation in the oscillatory integrand grows like (p/q)^(n/2) over the
  // answer; beyond ~120 levels double precision cannot recover the value.
  if (n > 120) {
    throw numeric_error("hit_probability: n = " + std::to_string(n) +
                        " exceeds the double-precision cancellation limit (120); "
                        "use chain_dp");
  }
  // Exact zeros: the chain is bipartite and the root is n steps away.
  if (t < n || (t - n) % 2 != 0) return 0.0;
  IntegralEstimate prev = integral_estimate(n, t, params, 1);
  for (int split = 2; split <= 64; split *= 2) {
    const IntegralEstimate cur = integral_estimate(n, t, params, split);
    const double scale = std::max(std::abs(cur.value), std::abs(prev.value));
    // Successive estimates cannot agree beyond the rounding of the signed
    // cancellation, so the target widens to the measured noise floor (a few
    // ulps of the |integrand| mass) when the answer is much smaller than it.
    const double eps = std::numeric_limits<double>::epsilon();
    const double floor = 16.0 * eps * std::max(cur.abs_scale, prev.abs_scale);
    if (std::abs(cur.value - prev.value) <= std::max(1e-13 * scale, floor)) {
      if (std::abs(cur.value.imag()) >
          std::max(1e-12 * std::max(1.0, std::abs(cur.value.real())), floor)) {
        throw numeric_error("hit_probability: imaginary residual " +
                            std::to_string(cur.value.imag()) + " at n = " +
                            std::to_string(n) + ", t = " + std::to_string(t));
      }
      return cur.value.real();
    }
    prev = cur;
  }
  throw numeric_error("hit_probability: quadrature did not converge for n = " +
                      std::to_string(n) + ", t = " + std::to_string(t));
}

std::vector<double> chain_dp(int n, int t_max, const ChainParams& params) {
  if (n < 0 || t_max < 0) {
    throw parameter_error("chain_dp: need n >= 0 and t_max >= 0");
  }
  if (!(params.p > 0.5 && params.p < 1.0) ||
      std::abs(params.p + params.q - 1.0) > 1e-12) {
    throw parameter_error("chain_dp: need p in (1/2, 1) and q = 1 - p");
  }
  // Toward-root moves carry v - p*v rather than q*v: for p > 1/2 the
  // subtraction is exact (Sterbenz), so each site's outflow sums to its mass
  // bit-for-bit and the only mass drift left is the rounding of the
  // per-site additions (a few 1e-16 over thousands of steps).
  const auto down = [p = params.p](double v) { return v - p * v; };
  // Sites 0..n+t_max: mass that crosses the frontier can never return in the
  // remaining steps, so the truncation is exact for the root value.
  const std::size_t sites = static_cast<std::size_t>(n) + t_max + 2;
  std::vector<double> u(sites, 0.0), next(sites, 0.0);
  u[static_cast<std::size_t>(n)] = 1.0;
  std::vector<double> root(static_cast<std::size_t>(t_max) + 1, 0.0);
  root[0] = (n == 0) ? 1.0 : 0.0;
  for (int t = 1; t <= t_max; ++t) {
    next[0] = down(u[1]);
    next[1] = u[0] + down(u[2]);
    for (std::size_t j = 2; j + 1 < sites; ++j) {
      next[j] = params.p * u[j - 1] + down(u[j + 1]);
    }
    next[sites - 1] = params.p * u[sites - 2];  // absorbing frontier edge
    std::swap(u, next);
    root[static_cast<std::size_t>(t)] = u[0];
  }
  return root;
}

std::pair<int, double> classical_peak(int n, const ChainParams& params) {
  if (n < 1) throw parameter_error("classical_peak: need n >= 1");
  const int t_max = 4 * n + 60;
  const std::vector<double> root = chain_dp(n, t_max, params);
  int t_star = 0;
  double p_star = -1.0;
  for (int t = 0; t <= t_max; ++t) {
    const double v = root[static_cast<std::size_t>(t)];
    if (v > p_star) {
      p_star = v;
      t_star = t;
    }
  }
  return {t_star, p_star};
}

}  // namespace qwalk::classical
