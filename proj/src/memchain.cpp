#include "qwalk/memchain.hpp"

#include <numeric>
#include <string>

namespace qwalk::memchain {

double MemoryDistribution::total_mass() const {
  return std::accumulate(mu.begin(), mu.end(), 0.0);
}

MemoryDistribution evolve_distribution(const MemoryDistribution& mu,
                                       const MemoryChain& chain) {
  const int n = mu.n_sites;
  if (n != chain.n_sites) {
    throw parameter_error("evolve_distribution: distribution has " +
                          std::to_string(n) + " sites but chain has " +
                          std::to_string(chain.n_sites));
  }
  if (static_cast<int>(chain.layers.size()) != n) {
    throw parameter_error("evolve_distribution: chain must carry one layer per site");
  }
  MemoryDistribution result(n);
  // Row j of the result is column j of mu pushed through layer P_j:
  //   result[j][k] = sum_i mu[i][j] * P_j[i][k].
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double m = mu.at(i, j);
      if (m == 0.0) continue;
      for (int k = 0; k < n; ++k) {
        result.at(j, k) += m * chain.layer_at(j, i, k);
      }
    }
  }
  return result;
}

MemoryChain persistent_cycle_chain(int n_sites, double p) {
  if (n_sites < 3) {
    throw parameter_error("persistent_cycle_chain: need at least 3 sites, got " +
                          std::to_string(n_sites));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw parameter_error("persistent_cycle_chain: persistence probability must lie in [0,1], got " +
                          std::to_string(p));
  }
  MemoryChain chain;
  chain.n_sites = n_sites;
  chain.layers.assign(static_cast<std::size_t>(n_sites),
                      std::vector<double>(static_cast<std::size_t>(n_sites) * n_sites, 0.0));
  const auto mod = [n_sites](int v) {
    int r = v % n_sites;
    return r < 0 ? r + n_sites : r;
  };
  for (int j = 0; j < n_sites; ++j) {
    auto& layer = chain.layers[static_cast<std::size_t>(j)];
    const auto at = [&layer, n_sites](int i, int k) -> double& {
      return layer[static_cast<std::size_t>(i) * n_sites + k];
    };
    // Rows for states that cannot feed site j keep a self-loop so the matrix
    // stays stochastic; they never hold mass for this walk.
    for (int i = 0; i < n_sites; ++i) at(i, i) = 1.0;
    const int prev_cw = mod(j - 1);   // arrived moving "up" the cycle
    const int prev_ccw = mod(j + 1);  // arrived moving "down" the cycle
    at(prev_cw, prev_cw) = 0.0;
    at(prev_cw, mod(j + 1)) += p;        // keep direction
    at(prev_cw, mod(j - 1)) += 1.0 - p;  // reverse
    at(prev_ccw, prev_ccw) = 0.0;
    at(prev_ccw, mod(j - 1)) += p;
    at(prev_ccw, mod(j + 1)) += 1.0 - p;
    // The dwell row (i == j) describes a self-transition arrival, which this
    // walk never produces; it keeps the self-loop so P_j stays stochastic.
  }
  return chain;
}

std::vector<double> marginal(const MemoryDistribution& mu) {
  const int n = mu.n_sites;
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(j)] += mu.at(i, j);
    }
  }
  return out;
}

}  // namespace qwalk::memchain
