#include "logitlab/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "logitlab/error.hpp"

namespace logitlab {

namespace {

void require_matching(const PotentialTable& phi, const ProfileSpace& space) {
  if (phi.size() != space.size()) {
    throw ShapeError("potential table has " + std::to_string(phi.size()) +
                     " entries for a space of " + std::to_string(space.size()));
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  /// Returns the surviving root.
  std::size_t unite(std::size_t a, std::size_t b) {
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return a;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace

PotentialStats potential_stats(const PotentialTable& phi,
                               const ProfileSpace& space) {
  require_matching(phi, space);
  PotentialStats stats;
  for (StateIndex x = 0; x < space.size(); ++x) {
    if (phi[x] > phi[stats.argmax]) stats.argmax = x;
    if (phi[x] < phi[stats.argmin]) stats.argmin = x;
    space.for_each_neighbor(x, [&](StateIndex y, int, int) {
      const double gap = phi[x] - phi[y];
      if (gap > stats.local_variation) {
        stats.local_variation = gap;
        stats.local_high = x;
        stats.local_low = y;
      }
    });
  }
  stats.global_variation = phi[stats.argmax] - phi[stats.argmin];
  return stats;
}

HillReport zeta(const PotentialTable& phi, const ProfileSpace& space) {
  require_matching(phi, space);
  const std::size_t n = space.size();
  std::vector<StateIndex> order(n);
  std::iota(order.begin(), order.end(), StateIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](StateIndex a, StateIndex b) {
    return phi[a] < phi[b];
  });

  DisjointSets sets(n);
  std::vector<StateIndex> lowest(n);  // per root: argmin of the component
  std::vector<bool> inserted(n, false);
  HillReport report;
  bool have_candidate = false;

  for (StateIndex v : order) {
    inserted[v] = true;
    lowest[v] = v;
    std::size_t root = v;
    space.for_each_neighbor(v, [&](StateIndex u, int, int) {
      if (!inserted[u]) return;
      const std::size_t other = sets.find(u);
      if (other == root) return;
      StateIndex a = lowest[root];
      StateIndex b = lowest[other];
      if (phi[a] < phi[b] || (phi[a] == phi[b] && a > b)) std::swap(a, b);
      const double candidate = phi[v] - phi[a];
      if (!have_candidate || candidate > report.zeta) {
        report = {candidate, a, b, v};
        have_candidate = true;
      }
      const StateIndex low = phi[lowest[other]] < phi[lowest[root]] ||
                                     (phi[lowest[other]] == phi[lowest[root]] &&
                                      lowest[other] < lowest[root])
                                 ? lowest[other]
                                 : lowest[root];
      root = sets.unite(root, other);
      lowest[root] = low;
    });
  }
  report.zeta = std::max(report.zeta, 0.0);
  return report;
}

CutwidthReport cutwidth_of_ordering(const SocialGraph& graph,
                                    std::span<const int> ordering) {
  const int n = graph.vertices();
  if (static_cast<int>(ordering.size()) != n) {
    throw ArgumentError("ordering has " + std::to_string(ordering.size()) +
                        " entries for " + std::to_string(n) + " vertices");
  }
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < n; ++k) {
    const int v = ordering[k];
    if (v < 0 || v >= n || position[v] != -1) {
      throw ArgumentError("ordering is not a permutation of the vertices");
    }
    position[v] = k;
  }
  CutwidthReport report;
  report.ordering.assign(ordering.begin(), ordering.end());
  if (n < 2) return report;
  // +1 where an edge opens, -1 where it closes.
  std::vector<int> delta(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : graph.edges()) {
    const auto [lo, hi] = std::minmax(position[u], position[v]);
    ++delta[lo];
    --delta[hi];
  }
  int open = 0;
  for (int k = 0; k + 1 < n; ++k) {
    open += delta[k];
    report.cuts.push_back(open);
    report.cutwidth = std::max(report.cutwidth, open);
  }
  return report;
}

CutwidthReport cutwidth(const SocialGraph& graph) {
  const int n = graph.vertices();
  if (n > kCutwidthMaxVertices) {
    throw BudgetError("cutwidth: " + std::to_string(n) +
                      " vertices exceeds the subset DP limit of " +
                      std::to_string(kCutwidthMaxVertices));
  }
  if (n <= 1) {
    std::vector<int> trivial(static_cast<std::size_t>(n), 0);
    return cutwidth_of_ordering(graph, trivial);
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> neighbours(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : graph.edges()) {
    neighbours[u] |= std::uint32_t{1} << v;
    neighbours[v] |= std::uint32_t{1} << u;
  }

  std::vector<std::uint16_t> cut(std::size_t{full} + 1, 0);
  std::vector<std::uint16_t> best(std::size_t{full} + 1, 0);
  for (std::uint32_t t = 1; t <= full; ++t) {
    const int v = std::countr_zero(t);
    const std::uint32_t rest = t & (t - 1);
    const int inside = std::popcount(neighbours[v] & rest);
    cut[t] = static_cast<std::uint16_t>(cut[rest] + graph.degree(v) - 2 * inside);
    std::uint16_t smallest = UINT16_MAX;
    for (std::uint32_t bits = t; bits != 0; bits &= bits - 1) {
      const std::uint32_t without = t & ~(bits & (0 - bits));
      smallest = std::min(smallest, best[without]);
    }
    best[t] = std::max(cut[t], smallest);
  }

  // Backtrack: peel the lowest-index vertex that can go last.
  std::vector<int> ordering(static_cast<std::size_t>(n));
  std::uint32_t t = full;
  for (int k = n - 1; k >= 0; --k) {
    for (std::uint32_t bits = t; bits != 0; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      const std::uint32_t without = t & ~(std::uint32_t{1} << v);
      if (std::max(cut[t], best[without]) == best[t]) {
        ordering[k] = v;
        t = without;
        break;
      }
    }
  }
  CutwidthReport report = cutwidth_of_ordering(graph, ordering);
  if (report.cutwidth != best[full]) {
    throw NumericalError("cutwidth backtrack produced an inconsistent ordering");
  }
  return report;
}

}  // namespace logitlab
