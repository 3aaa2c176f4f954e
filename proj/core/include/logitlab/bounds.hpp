#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logitlab/exact.hpp"
#include "logitlab/game.hpp"
#include "logitlab/logit.hpp"
#include "logitlab/metrics.hpp"

namespace logitlab {

// ---------------------------------------------------------------------------
// Bottleneck ratio

struct BottleneckResult {
  double pi_r = 0.0;         // pi(R)
  double flow = 0.0;         // Q(R, complement of R)
  double ratio = 0.0;        // B(R) = flow / pi(R)
  double lower_bound = 0.0;  // (1 - 2 eps) / (2 B(R)); infinite when B = 0
};

/// Throws ArgumentError when R is empty, all of S, or has duplicates,
/// RangeError on an out-of-range state, and HypothesisError when
/// pi(R) > 1/2.
BottleneckResult bottleneck_ratio(const TransitionMatrix& p,
                                  std::span<const double> pi,
                                  std::span<const StateIndex> r,
                                  double eps = kDefaultEpsilon);

struct CandidateSet {
  std::string family;  // "level", "weight" or "minimizer"
  double parameter = 0.0;
  std::vector<StateIndex> states;
};

/// Level sets {Phi >= c} for every attained c above the minimum, weight
/// sets {w < c} for c = 1..n (binary spaces only), and singletons of the
/// potential minimisers.
std::vector<CandidateSet> bottleneck_candidates(const PotentialTable& phi,
                                                const ProfileSpace& space);

struct BottleneckSearch {
  CandidateSet set;
  BottleneckResult result;
  std::size_t evaluated = 0;  // candidates with pi(R) <= 1/2
};

/// The candidate with the largest lower bound among those satisfying the
/// pi(R) <= 1/2 hypothesis; empty when none does.
std::optional<BottleneckSearch> best_bottleneck(const TransitionMatrix& p,
                                                std::span<const double> pi,
                                                const PotentialTable& phi,
                                                const ProfileSpace& space,
                                                double eps = kDefaultEpsilon);

// ---------------------------------------------------------------------------
// Dominance

/// A profile in which every player plays a weakly dominant strategy
/// (lowest index when several are), or empty.
std::optional<StateIndex> dominant_profile(const Game& game,
                                           double tol = 1e-12);

/// True when the game has the gen_dominant(n, m) utilities: radices all
/// equal to m >= 2, u_i = 0 at the all-zero profile and -1 elsewhere.
bool is_dominant_family(const Game& game);

// ---------------------------------------------------------------------------
// Theory report

enum class BoundKind { upper, lower };
enum class BoundTarget { t_mix, t_rel };

std::string_view to_string(BoundKind kind);
std::string_view to_string(BoundTarget target);

struct BoundEntry {
  std::string id;
  std::string formula;
  BoundKind kind = BoundKind::upper;
  BoundTarget target = BoundTarget::t_mix;
  bool applicable = false;
  std::string reason;  // why the entry does or does not apply
  double value = 0.0;  // meaningful only when applicable
  std::optional<double> exact;
  std::optional<bool> satisfied;
};

/// Potential landscape of a coordination game on a clique, where Phi only
/// depends on the number k of players choosing 1.
struct CliqueLandscape {
  double k_continuous = 0.0;  // (n-1) delta0 / (delta0 + delta1) + 1/2
  int k_star = 0;             // nearest integer
  int k_argmax = 0;           // direct argmax over k (lowest on ties)
  std::vector<double> phi_by_weight;
  double zeta = 0.0;          // Phi(k_star) - max(Phi(0), Phi(n))
};

CliqueLandscape clique_landscape(int n, const CoordinationPayoffs& payoffs);

struct StructureMetrics {
  std::optional<PotentialTable> phi;
  std::optional<PotentialStats> stats;
  std::optional<HillReport> hill;
  std::optional<CutwidthReport> cutwidth;  // coordination games only
};

/// Everything the report can use. Potential-derived fields stay empty for
/// games without an exact potential.
StructureMetrics structure_metrics(const Game& game);

struct ExactQuantities {
  std::optional<std::size_t> t_mix;
  std::optional<double> t_rel;
  std::optional<double> pi_min;
  std::optional<BottleneckSearch> bottleneck;
};

/// Exact t_mix, t_rel (reversible chains only), pi_min and the best
/// family bottleneck for the chain at beta. t_mix comes from stepping the
/// rows, or from mixing_time_by_squaring once that passes 20000 steps on
/// spaces of at most 512 states.
ExactQuantities exact_quantities(const Game& game, double beta,
                                 double eps = kDefaultEpsilon,
                                 std::size_t cap = kDefaultMixingCap);

struct BoundsReport {
  double beta = 0.0;
  double eps = kDefaultEpsilon;
  std::vector<BoundEntry> entries;
  std::optional<CliqueLandscape> clique;

  const BoundEntry* find(std::string_view id) const;
  /// False when some applicable entry with an exact value is violated.
  bool all_satisfied() const;
};

/// Evaluates each theorem's explicit bound at (beta, eps). Inapplicable
/// entries are kept with a reason. When exact values are supplied, each
/// applicable entry gets a satisfied flag: upper bounds on t_mix compare
/// against the ceiling of the bound, lower bounds against the ceiling of
/// the bound minus 1e-9, and t_rel bounds with relative slack 1e-9.
BoundsReport theory_report(const Game& game, double beta, double eps,
                           const StructureMetrics& metrics,
                           const ExactQuantities& exact = {});

// ---------------------------------------------------------------------------
// Canonical paths

/// A path as its sequence of states, first == x and last == y.
using StatePath = std::vector<StateIndex>;

struct PathEntry {
  StateIndex from = 0;
  StateIndex to = 0;
  StatePath states;
};

using PathSet = std::vector<PathEntry>;

inline constexpr std::size_t kPathSetBudget = std::size_t{1} << 10;

/// Path from x to y that fixes the disagreeing coordinates in the order
/// given by `ordering` (ordering[k] = player at position k). Throws
/// ArgumentError unless ordering is a permutation of the players.
StatePath canonical_path(const ProfileSpace& space,
                         std::span<const int> ordering, StateIndex x,
                         StateIndex y);

/// One canonical path per ordered pair x != y. Throws BudgetError when |S|
/// exceeds kPathSetBudget.
PathSet canonical_paths(const ProfileSpace& space, std::span<const int> ordering);

/// For the edge (u, v) of the canonical x-y path changing player i at
/// position p: splices x on positions before p with y from p on when
/// pi(u) <= pi(v), and x up to p with y after p otherwise. Throws
/// ArgumentError when (u, v) is not an edge of that path.
StateIndex f_edge(const ProfileSpace& space, std::span<const int> ordering,
                  StateIndex u, StateIndex v, StateIndex x, StateIndex y,
                  std::span<const double> pi);

struct CongestionReport {
  double value = 0.0;
  StateIndex edge_from = 0;  // worst directed edge
  StateIndex edge_to = 0;
};

/// rho = max over directed edges e of (1/Q(e)) sum_{(x,y): e on path}
/// pi(x) pi(y) |path|. Throws ArgumentError on a malformed path or an edge
/// with Q(e) = 0.
CongestionReport congestion(const DenseMatrix& q, std::span<const double> pi,
                            const PathSet& paths);

/// Paths for each off-diagonal edge (u, v) of the beta = 0 chain: the edge
/// itself when u or v minimises Phi on their common line, otherwise
/// u -> z -> v through the line minimiser z (lowest index on ties).
PathSet admissible_paths(const ProfileSpace& space, const PotentialTable& phi);

struct ComparisonReport {
  double alpha = 0.0;
  double gamma = 0.0;  // max pi(x) / pi_hat(x)
  StateIndex edge_from = 0;
  StateIndex edge_to = 0;
};

/// Congestion ratio of `paths` (M-paths, one per off-diagonal edge of
/// M-hat) and the ratio gamma. Throws ArgumentError when a path uses a
/// non-edge of M or the path set does not cover the edges of M-hat once.
ComparisonReport congestion_ratio(const DenseMatrix& q,
                                  std::span<const double> pi,
                                  const DenseMatrix& q_hat,
                                  std::span<const double> pi_hat,
                                  const PathSet& paths);

}  // namespace logitlab
