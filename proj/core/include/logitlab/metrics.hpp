#pragma once

#include <span>
#include <vector>

#include "logitlab/game.hpp"
#include "logitlab/profile.hpp"

namespace logitlab {

struct PotentialStats {
  double global_variation = 0.0;  // Phi_max - Phi_min
  StateIndex argmax = 0;
  StateIndex argmin = 0;
  double local_variation = 0.0;   // max Phi(x) - Phi(y) over Hamming neighbours
  StateIndex local_high = 0;
  StateIndex local_low = 0;
};

/// Exact scan of S and of every Hamming edge (all m_i - 1 alternatives per
/// coordinate). Throws ShapeError when phi does not match the space.
PotentialStats potential_stats(const PotentialTable& phi,
                               const ProfileSpace& space);

/// Hill metric. zeta(x, y) is the smallest possible climb above Phi(x) on a
/// Hamming path from x to y, for Phi(x) >= Phi(y); zeta is its maximum.
struct HillReport {
  double zeta = 0.0;
  StateIndex x = 0;     // higher-potential endpoint
  StateIndex y = 0;
  StateIndex peak = 0;  // highest state on an optimal x-y path
};

/// Union-find sweep: states are inserted by ascending Phi (ties by index)
/// and joined to inserted neighbours. When two components first meet at a
/// state of potential h, the worst new pair is their two minima, giving
/// h - max(min_A, min_B).
HillReport zeta(const PotentialTable& phi, const ProfileSpace& space);

inline constexpr int kCutwidthMaxVertices = 24;

struct CutwidthReport {
  int cutwidth = 0;
  std::vector<int> ordering;  // ordering[k] = vertex at position k
  std::vector<int> cuts;      // edges crossing after each of the first n-1 positions
};

/// Exact cutwidth by dynamic programming over vertex subsets:
/// f(T) = max(cut(T), min_{v in T} f(T \ {v})). Throws BudgetError above
/// kCutwidthMaxVertices vertices.
CutwidthReport cutwidth(const SocialGraph& graph);

/// Cuts of a fixed ordering. Throws ArgumentError unless `ordering` is a
/// permutation of the vertices.
CutwidthReport cutwidth_of_ordering(const SocialGraph& graph,
                                    std::span<const int> ordering);

}  // namespace logitlab
