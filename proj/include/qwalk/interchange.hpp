#pragma once
// Coinless discrete-time quantum walk core: the state lives in the product
// (previous node) x (current node); one evolution step applies the
// interchange operator (slot swap) followed by the per-site unitaries.

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qwalk/common.hpp"

namespace qwalk::interchange {

// Sparse walk state: amplitude per ordered (prev, current) node pair.
struct ProductState {
  // Key = (prev, current).  An ordered map keeps iteration deterministic.
  std::map<std::pair<NodeId, NodeId>, Amplitude> entries;

  double norm() const;  // l2 norm of the amplitude vector
  Amplitude at(NodeId prev, NodeId current) const;
  void add(NodeId prev, NodeId current, Amplitude amp);
};

// A per-site unitary acting on the neighbor subspace of `site`.
// `reduced` is k x k (row-major) against the explicit `neighbors` ordering:
//   reduced[idx(incoming neighbor)][idx(outgoing neighbor)].
// That orientation is pinned by the line walk: the state arriving from
// site-1 maps to sqrt(1-p)|site-1> + sqrt(p)|site+1>, i.e. row 0 of the
// matrix below is read left to right as outgoing coefficients.
struct SiteUnitary {
  NodeId site = 0;
  std::vector<NodeId> neighbors;            // explicit basis order
  std::vector<Amplitude> reduced;           // row-major k x k
  bool degenerate = false;                  // flagged for p in {0,1} limits

  int degree() const { return static_cast<int>(neighbors.size()); }
  Amplitude coef(int incoming_idx, int outgoing_idx) const {
    return reduced[static_cast<std::size_t>(incoming_idx) * neighbors.size() + outgoing_idx];
  }
  int neighbor_index(NodeId v) const;       // -1 when v is not a neighbor
};

// Neighborhood structure of the underlying graph.
using NeighborFn = std::function<std::vector<NodeId>(NodeId)>;

// A walk = graph adjacency + unitaries.  Unitaries may be stored explicitly
// (per site) or generated on demand from a factory; the factory form serves
// infinite graphs (the line, the tree).
struct InterchangeWalk {
  NeighborFn adjacency;
  std::function<SiteUnitary(NodeId)> unitary_factory;
  std::unordered_map<NodeId, SiteUnitary> unitaries;  // overrides the factory

  const SiteUnitary& unitary_for(NodeId site) const;  // config_error if absent

 private:
  mutable std::unordered_map<NodeId, SiteUnitary> cache_;
};

// Slot swap: the entry at (i, j) moves to (j, i).  Involution; norm kept.
ProductState apply_interchange(const ProductState& state);

// One full evolution step: interchange, then for each first-slot value j the
// second slot is transformed by the site unitary of j.  Unitary (norm kept to
// machine precision).  Throws config_error naming the site when a reached
// site has no unitary.
ProductState step(const ProductState& state, const InterchangeWalk& walk);

// Walk on the integer line: reduced 2x2 block over neighbors {site-1, site+1}
//   [[ sqrt(1-p),  sqrt(p)   ],
//    [ -sqrt(p),   sqrt(1-p) ]]
// p in [0,1]; the p in {0,1} limits are permutation matrices and are flagged
// degenerate.  Throws parameter_error outside [0,1].
SiteUnitary line_unitary(NodeId site, double p);

// Reflection unitary built from a probability row: entries
// 2*sqrt(p_k p_m) - delta_km over the given neighbors.  probs must sum to 1
// within 1e-12 (else parameter_error: the matrix would not be unitary).
SiteUnitary szegedy_unitary(NodeId site, const std::vector<NodeId>& neighbors,
                            const std::vector<double>& probs);

// True iff max-norm deviation of reduced * reduced^H from identity <= tol.
bool verify_unitary(const SiteUnitary& u, double tol);

}  // namespace qwalk::interchange
