#include "qwalk/interchange.hpp"

#include <cmath>
#include <string>

namespace qwalk::interchange {

double ProductState::norm() const {
  // Kahan summation: states can hold millions of entries, where naive
  // accumulation would swamp the unitarity drift being measured.
  double s = 0.0, comp = 0.0;
  for (const auto& [key, amp] : entries) {
    const double y = std::norm(amp) - comp;
    const double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return std::sqrt(s);
}

Amplitude ProductState::at(NodeId prev, NodeId current) const {
  auto it = entries.find({prev, current});
  return it == entries.end() ? Amplitude{0.0, 0.0} : it->second;
}

void ProductState::add(NodeId prev, NodeId current, Amplitude amp) {
  entries[{prev, current}] += amp;
}

int SiteUnitary::neighbor_index(NodeId v) const {
  for (std::size_t k = 0; k < neighbors.size(); ++k) {
    if (neighbors[k] == v) return static_cast<int>(k);
  }
  return -1;
}

const SiteUnitary& InterchangeWalk::unitary_for(NodeId site) const {
  if (auto it = unitaries.find(site); it != unitaries.end()) return it->second;
  if (auto it = cache_.find(site); it != cache_.end()) return it->second;
  if (!unitary_factory) {
    throw config_error("no site unitary configured for site " + std::to_string(site));
  }
  auto [it, inserted] = cache_.emplace(site, unitary_factory(site));
  return it->second;
}

ProductState apply_interchange(const ProductState& state) {
  ProductState out;
  for (const auto& [key, amp] : state.entries) {
    out.add(key.second, key.first, amp);
  }
  return out;
}

ProductState step(const ProductState& state, const InterchangeWalk& walk) {
  // One step = interchange followed by the per-site unitaries: the entry at
  // (i, j) is first swapped to (j, i), then the site-j unitary redistributes
  // the second slot over j's neighbors.
  ProductState out;
  for (const auto& [key, amp] : state.entries) {
    const auto [i, j] = key;
    const SiteUnitary& u = walk.unitary_for(j);
    const int in_idx = u.neighbor_index(i);
    if (in_idx < 0) {
      throw config_error("state entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") is not an edge: site " + std::to_string(j) +
                         " has no neighbor " + std::to_string(i));
    }
    for (int out_idx = 0; out_idx < u.degree(); ++out_idx) {
      const Amplitude c = u.coef(in_idx, out_idx);
      if (c == Amplitude{0.0, 0.0}) continue;
      out.add(j, u.neighbors[static_cast<std::size_t>(out_idx)], amp * c);
    }
  }
  return out;
}

SiteUnitary line_unitary(NodeId site, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw parameter_error("line_unitary: transmission probability must lie in [0,1], got " +
                          std::to_string(p));
  }
  const double c = std::sqrt(1.0 - p);
  const double s = std::sqrt(p);
  SiteUnitary u;
  u.site = site;
  u.neighbors = {site - 1, site + 1};
  u.reduced = {Amplitude{c, 0.0}, Amplitude{s, 0.0},
               Amplitude{-s, 0.0}, Amplitude{c, 0.0}};
  u.degenerate = (p == 0.0 || p == 1.0);  // permutation limits
  return u;
}

SiteUnitary szegedy_unitary(NodeId site, const std::vector<NodeId>& neighbors,
                            const std::vector<double>& probs) {
  if (neighbors.size() != probs.size()) {
    throw parameter_error("szegedy_unitary: " + std::to_string(neighbors.size()) +
                          " neighbors but " + std::to_string(probs.size()) +
                          " probabilities");
  }
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) {
      throw parameter_error("szegedy_unitary: negative probability entry " + std::to_string(p));
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw parameter_error("szegedy_unitary: probabilities sum to " + std::to_string(total) +
                          ", not 1 (the reflection would not be unitary)");
  }
  const std::size_t k = neighbors.size();
  SiteUnitary u;
  u.site = site;
  u.neighbors = neighbors;
  u.reduced.assign(k * k, Amplitude{0.0, 0.0});
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      double v = 2.0 * std::sqrt(probs[r] * probs[c]);
      if (r == c) v -= 1.0;
      u.reduced[r * k + c] = Amplitude{v, 0.0};
    }
  }
  return u;
}

bool verify_unitary(const SiteUnitary& u, double tol) {
  const std::size_t k = u.neighbors.size();
  if (u.reduced.size() != k * k) return false;
  double worst = 0.0;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      Amplitude dot{0.0, 0.0};
      for (std::size_t m = 0; m < k; ++m) {
        dot += u.reduced[r * k + m] * std::conj(u.reduced[c * k + m]);
      }
      const double target = (r == c) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(dot - Amplitude{target, 0.0}));
    }
  }
  return worst <= tol;
}

}  // namespace qwalk::interchange
