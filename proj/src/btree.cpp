#include "qwalk/btree.hpp"

#include <cmath>
#include <string>

namespace qwalk::btree {

namespace {

const Amplitude kA = kOmega;                        // e^{2 pi i / 3}
const double kInvSqrt3 = 1.0 / kSqrt3;
const Amplitude kContinueIn = kA / kSqrt3;          // toward root, keep going
const Amplitude kTurnAway = (1.0 + kA) / kSqrt3;    // toward root, reverse
const Amplitude kTurnBack{kInvSqrt3, 0.0};          // away from root, reverse
const Amplitude kContinueOut = 2.0 * kA / kSqrt3;   // away from root, keep going

}  // namespace

int level_of(NodeId v) {
  int level = 0;
  for (NodeId w = v + 1; w > 1; w >>= 1) ++level;
  return level;
}

std::vector<NodeId> tree_neighbors(NodeId v) {
  if (v == 0) return {1};
  return {parent_of(v), left_child(v), right_child(v)};
}

interchange::SiteUnitary tree_unitary(NodeId j) {
  interchange::SiteUnitary u;
  u.site = j;
  u.neighbors = tree_neighbors(j);
  if (j == 0) {
    // Degree-1 root: the only norm-preserving choice up to phase is
    // reflection with coefficient 1.
    u.reduced = {Amplitude{1.0, 0.0}};
    return u;
  }
  const Amplitude d{kInvSqrt3, 0.0};
  const Amplitude o = kA / kSqrt3;
  u.reduced = {d, o, o,
               o, d, o,
               o, o, d};
  return u;
}

interchange::InterchangeWalk tree_walk() {
  interchange::InterchangeWalk walk;
  walk.adjacency = [](NodeId v) { return tree_neighbors(v); };
  walk.unitary_factory = [](NodeId v) { return tree_unitary(v); };
  return walk;
}

interchange::ProductState initial_state(int n) {
  if (n < 1) {
    throw parameter_error("initial_state: start level must be >= 1, got " +
                          std::to_string(n));
  }
  const NodeId v = (NodeId{1} << n) - 1;  // leftmost node of level n
  interchange::ProductState state;
  state.add(left_child(v), v, Amplitude{1.0, 0.0});
  return state;
}

std::vector<Amplitude> simulate_tree(int n, int t_max, std::size_t max_states) {
  interchange::ProductState state = initial_state(n);
  const interchange::InterchangeWalk walk = tree_walk();
  std::vector<Amplitude> h(static_cast<std::size_t>(t_max) + 1);
  h[0] = state.at(1, 0);
  for (int t = 1; t <= t_max; ++t) {
    if (state.entries.size() > max_states / 3) {
      throw resource_error("simulate_tree: state support would exceed " +
                           std::to_string(max_states) + " entries at step " +
                           std::to_string(t) + " (n = " + std::to_string(n) + ")");
    }
    state = interchange::step(state, walk);
    h[static_cast<std::size_t>(t)] = state.at(1, 0);
  }
  return h;
}

std::vector<Amplitude> simulate_projected(int n, int t_max) {
  if (n < 1) {
    throw parameter_error("simulate_projected: start level must be >= 1, got " +
                          std::to_string(n));
  }
  if (t_max < 0) {
    throw parameter_error("simulate_projected: t_max must be >= 0");
  }
  // The projected class sums are not l2-normalized and grow exponentially;
  // beyond this horizon they overflow double range.
  constexpr int kMaxHorizon = 2300;
  if (t_max > kMaxHorizon) {
    throw resource_error("simulate_projected: t_max = " + std::to_string(t_max) +
                         " exceeds the double-precision horizon " +
                         std::to_string(kMaxHorizon));
  }
  const std::size_t levels = static_cast<std::size_t>(n) + t_max + 2;
  std::vector<Amplitude> toward(levels), away(levels);      // current
  std::vector<Amplitude> new_toward(levels), new_away(levels);
  toward[static_cast<std::size_t>(n)] = Amplitude{1.0, 0.0};
  std::vector<Amplitude> h(static_cast<std::size_t>(t_max) + 1);
  h[0] = toward[0];
  for (int t = 1; t <= t_max; ++t) {
    const int top = std::min<int>(n + t, static_cast<int>(levels) - 2);
    for (int l = 0; l <= top; ++l) {
      const std::size_t lu = static_cast<std::size_t>(l);
      new_toward[lu] = kContinueIn * toward[lu + 1] + kTurnBack * away[lu + 1];
      if (l >= 2) {
        new_away[lu] = kTurnAway * toward[lu - 1] + kContinueOut * away[lu - 1];
      } else if (l == 1) {
        new_away[1] = toward[0];  // root reflection
      } else {
        new_away[0] = Amplitude{0.0, 0.0};
      }
    }
    std::swap(toward, new_toward);
    std::swap(away, new_away);
    h[static_cast<std::size_t>(t)] = toward[0];
  }
  return h;
}

namespace {

// DFS over projected root-avoiding paths.  `level` >= 1 until the final
// step, which must land at the root in the toward direction.
void enumerate_loops(int level, Direction dir, int steps_left, Amplitude weight,
                     Amplitude& total) {
  if (level - steps_left > 0) return;  // cannot reach the root in time
  if (steps_left == 1) {
    if (level == 1) {
      total += weight * (dir == Direction::toward_root ? kContinueIn : kTurnBack);
    }
    return;
  }
  if (dir == Direction::toward_root) {
    if (level >= 2) {
      enumerate_loops(level - 1, Direction::toward_root, steps_left - 1,
                      weight * kContinueIn, total);
    }
    enumerate_loops(level + 1, Direction::away_from_root, steps_left - 1,
                    weight * kTurnAway, total);
  } else {
    if (level >= 2) {
      enumerate_loops(level - 1, Direction::toward_root, steps_left - 1,
                      weight * kTurnBack, total);
    }
    enumerate_loops(level + 1, Direction::away_from_root, steps_left - 1,
                    weight * kContinueOut, total);
  }
}

}  // namespace

Amplitude loop_amplitude_bruteforce(int t) {
  if (t < 0) {
    throw parameter_error("loop_amplitude_bruteforce: path length must be >= 0");
  }
  if (t == 0 || t % 2 != 0) return Amplitude{0.0, 0.0};
  // Step 1 is the root reflection (coefficient 1) into (level 1, away).
  Amplitude total{0.0, 0.0};
  enumerate_loops(1, Direction::away_from_root, t - 1, Amplitude{1.0, 0.0}, total);
  return total;
}

}  // namespace qwalk::btree
