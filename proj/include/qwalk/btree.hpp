#pragma once
// The symmetric binary-tree walk: heap-indexed tree, per-node unitaries with
// root reflection, the full sparse simulator, the exact symmetry-projected
// line simulator for the root-return amplitude H_n(t), and the brute-force
// first-return loop amplitude.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qwalk/common.hpp"
#include "qwalk/interchange.hpp"

namespace qwalk::btree {

// Heap conventions: root = 0; children of v are 2v+1 and 2v+2; parent of
// v >= 1 is (v-1)/2; level(v) = floor(log2(v+1)).
inline NodeId parent_of(NodeId v) { return (v - 1) / 2; }
inline NodeId left_child(NodeId v) { return 2 * v + 1; }
inline NodeId right_child(NodeId v) { return 2 * v + 2; }
int level_of(NodeId v);

// Neighbors of a node: root has its single child; internal nodes list
// (parent, left child, right child) in that order.
std::vector<NodeId> tree_neighbors(NodeId v);

// Direction of the previous step in the symmetry-projected walk.
enum class Direction { toward_root, away_from_root };

// Amplitudes indexed by (level, direction).  A component at the root is
// always recorded as a toward_root arrival (no (0, away_from_root) entry).
struct ProjectedState {
  std::map<std::pair<int, Direction>, Amplitude> amps;
};

// Per-node unitary: internal nodes carry the symmetric 3x3 block
// (1/sqrt(3)) [[1,a,a],[a,1,a],[a,a,1]] over (parent, child, child) with
// a = exp(2*pi*i/3); the degree-1 root reflects with coefficient 1.
interchange::SiteUnitary tree_unitary(NodeId j);

// The tree walk as an InterchangeWalk (adjacency + unitary factory).
interchange::InterchangeWalk tree_walk();

// Pure state |c> (x) |v| with v the leftmost level-n node (v = 2^n - 1) and
// c its left child: the walker sits at level n directed toward the root.
// Throws parameter_error for n < 1 (level-0 start has no incoming direction;
// the multi-loop amplitudes G(t) = H_0(t) come from the series route).
interchange::ProductState initial_state(int n);

// Root-return amplitudes H_n(t), t = 0..t_max, by full sparse evolution.
// H_n(t) is the coefficient of the unique pair (child-of-root, root).
// Memory guard: throws resource_error when the predicted state support
// exceeds max_states (default sized for the t_max <= 26 guideline).
std::vector<Amplitude> simulate_tree(int n, int t_max,
                                     std::size_t max_states = std::size_t(1) << 27);

// Same amplitudes via the exact symmetry-projected line walk
// (O(t_max^2) cost).  Projected step weights: directed toward the root,
// continue a/sqrt(3), turn away (1+a)/sqrt(3); directed away from the root,
// turn back 1/sqrt(3), continue 2a/sqrt(3); root reflection coefficient 1.
// Class sums grow exponentially with t (they are not l2-normalized), so
// t_max is guarded against double overflow: throws resource_error above
// t_max = 2300.
std::vector<Amplitude> simulate_projected(int n, int t_max);

// First-return loop amplitude g(t): the sum over all projected root-to-root
// paths of length t that touch the root only at their endpoints, of the
// product of their step weights, enumerated path by path.  g(0) = 0 by
// convention; odd t returns 0 (loops take an even number of steps).
// Throws parameter_error for t < 0; intended for small even t (cost 2^(t/2)).
Amplitude loop_amplitude_bruteforce(int t);

}  // namespace qwalk::btree
