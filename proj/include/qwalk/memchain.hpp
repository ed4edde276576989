#pragma once
// Classical memory-2 Markov chains: a two-index distribution mu[i][j]
// (probability of being at site j having arrived from site i) evolved by
// per-site transition layers P_j, plus the persistent cycle walk.

#include <vector>

#include "qwalk/common.hpp"

namespace qwalk::memchain {

// Two-index distribution over (previous site, current site).
struct MemoryDistribution {
  int n_sites = 0;
  // mu[i][j] = P(prev = i, current = j); row-major n_sites x n_sites.
  std::vector<double> mu;

  MemoryDistribution() = default;
  explicit MemoryDistribution(int n) : n_sites(n), mu(static_cast<std::size_t>(n) * n, 0.0) {}

  double& at(int i, int j) { return mu[static_cast<std::size_t>(i) * n_sites + j]; }
  double at(int i, int j) const { return mu[static_cast<std::size_t>(i) * n_sites + j]; }
  double total_mass() const;
};

// n_sites layers of n_sites x n_sites row-stochastic matrices.  layers[j] is
// the transition matrix applied to the arrival-history column of site j.
struct MemoryChain {
  int n_sites = 0;
  std::vector<std::vector<double>> layers;  // layers[j], row-major n x n

  double layer_at(int j, int i, int k) const {
    return layers[static_cast<std::size_t>(j)][static_cast<std::size_t>(i) * n_sites + k];
  }
};

// One step: row j of the result is column j of mu pushed through layer P_j,
//   result[j][k] = sum_i mu[i][j] * P_j[i][k].
// Total mass is preserved.  Throws parameter_error on size mismatch.
MemoryDistribution evolve_distribution(const MemoryDistribution& mu, const MemoryChain& chain);

// Persistent walk on a cycle of n_sites sites: continue in the previous
// direction with probability p, reverse with probability 1-p.  Each layer P_j
// carries a 3x3 block centered at (j, j) (indices mod n_sites) and 1 on the
// diagonal elsewhere; wrap-around entries follow the rotational symmetry of
// the cycle.  Throws parameter_error for p outside [0,1] or n_sites < 3.
MemoryChain persistent_cycle_chain(int n_sites, double p);

// Marginal over the current site: entry j = sum of column j of mu.
std::vector<double> marginal(const MemoryDistribution& mu);

}  // namespace qwalk::memchain
