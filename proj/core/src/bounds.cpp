#include "logitlab/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "logitlab/error.hpp"

namespace logitlab {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();
constexpr std::size_t kSteppingLimit = 20000;
constexpr std::size_t kSquaringMaxStates = 512;

void require_pi(std::span<const double> pi, std::size_t size, const char* what) {
  if (pi.size() != size) {
    throw ShapeError(std::string(what) + ": distribution has " +
                     std::to_string(pi.size()) + " entries, expected " +
                     std::to_string(size));
  }
}

std::vector<int> positions_of(std::span<const int> ordering, int players) {
  if (static_cast<int>(ordering.size()) != players) {
    throw ArgumentError("ordering must list each of the " +
                        std::to_string(players) + " players once");
  }
  std::vector<int> position(static_cast<std::size_t>(players), -1);
  for (int k = 0; k < players; ++k) {
    const int i = ordering[k];
    if (i < 0 || i >= players || position[i] != -1) {
      throw ArgumentError("ordering is not a permutation of the players");
    }
    position[i] = k;
  }
  return position;
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Bottleneck ratio

BottleneckResult bottleneck_ratio(const TransitionMatrix& p,
                                  std::span<const double> pi,
                                  std::span<const StateIndex> r, double eps) {
  const std::size_t n = p.size();
  require_pi(pi, n, "bottleneck_ratio");
  if (r.empty() || r.size() >= n) {
    throw ArgumentError("R must be a non-empty proper subset of S");
  }
  std::vector<bool> member(n, false);
  for (StateIndex x : r) {
    if (x >= n) throw RangeError("state " + std::to_string(x) + " out of range");
    if (member[x]) throw ArgumentError("R lists state " + std::to_string(x) + " twice");
    member[x] = true;
  }
  BottleneckResult result;
  for (StateIndex x : r) {
    result.pi_r += pi[x];
    for (StateIndex y = 0; y < n; ++y) {
      if (!member[y]) result.flow += pi[x] * p(x, y);
    }
  }
  if (result.pi_r > 0.5 + 1e-12) {
    throw HypothesisError("bottleneck ratio needs pi(R) <= 1/2, got pi(R) = " +
                          std::to_string(result.pi_r));
  }
  result.ratio = result.flow / result.pi_r;
  result.lower_bound =
      result.ratio > 0.0 ? (1.0 - 2.0 * eps) / (2.0 * result.ratio) : kInfinity;
  return result;
}

std::vector<CandidateSet> bottleneck_candidates(const PotentialTable& phi,
                                                const ProfileSpace& space) {
  if (phi.size() != space.size()) throw ShapeError("potential/space size mismatch");
  std::vector<CandidateSet> out;
  std::vector<double> levels(phi.values);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (std::size_t k = 1; k < levels.size(); ++k) {
    CandidateSet set{"level", levels[k], {}};
    for (StateIndex x = 0; x < space.size(); ++x) {
      if (phi[x] >= levels[k]) set.states.push_back(x);
    }
    out.push_back(std::move(set));
  }

  const auto radices = space.radices();
  const bool binary =
      std::all_of(radices.begin(), radices.end(), [](int m) { return m == 2; });
  if (binary) {
    for (int c = 1; c <= space.players(); ++c) {
      CandidateSet set{"weight", static_cast<double>(c), {}};
      for (StateIndex x = 0; x < space.size(); ++x) {
        if (std::popcount(x) < c) set.states.push_back(x);
      }
      if (set.states.size() < space.size()) out.push_back(std::move(set));
    }
  }

  for (StateIndex x = 0; x < space.size(); ++x) {
    if (phi[x] == levels.front() && space.size() > 1) {
      out.push_back({"minimizer", phi[x], {x}});
    }
  }
  return out;
}

std::optional<BottleneckSearch> best_bottleneck(const TransitionMatrix& p,
                                                std::span<const double> pi,
                                                const PotentialTable& phi,
                                                const ProfileSpace& space,
                                                double eps) {
  std::optional<BottleneckSearch> best;
  std::size_t evaluated = 0;
  for (CandidateSet& set : bottleneck_candidates(phi, space)) {
    double mass = 0.0;
    for (StateIndex x : set.states) mass += pi[x];
    if (mass > 0.5 + 1e-12) continue;
    const BottleneckResult result = bottleneck_ratio(p, pi, set.states, eps);
    ++evaluated;
    if (!best || result.lower_bound > best->result.lower_bound) {
      best = BottleneckSearch{std::move(set), result, 0};
    }
  }
  if (best) best->evaluated = evaluated;
  return best;
}

// ---------------------------------------------------------------------------
// Dominance

std::optional<StateIndex> dominant_profile(const Game& game, double tol) {
  const ProfileSpace& space = game.space();
  StateIndex profile = 0;
  for (int i = 0; i < space.players(); ++i) {
    const int m = space.radix(i);
    int found = -1;
    for (int s = 0; s < m && found < 0; ++s) {
      bool dominant = true;
      for (StateIndex x = 0; x < space.size() && dominant; ++x) {
        if (space.strategy(x, i) != 0) continue;  // one x per x_{-i}
        const double own = game.utility(i, space.with_strategy(x, i, s));
        for (int t = 0; t < m; ++t) {
          if (game.utility(i, space.with_strategy(x, i, t)) > own + tol) {
            dominant = false;
            break;
          }
        }
      }
      if (dominant) found = s;
    }
    if (found < 0) return std::nullopt;
    profile += static_cast<StateIndex>(found) * space.stride(i);
  }
  return profile;
}

bool is_dominant_family(const Game& game) {
  const ProfileSpace& space = game.space();
  const int m = space.radix(0);
  if (m < 2) return false;
  for (int i = 0; i < space.players(); ++i) {
    if (space.radix(i) != m) return false;
  }
  for (int i = 0; i < space.players(); ++i) {
    for (StateIndex x = 0; x < space.size(); ++x) {
      const double expected = x == 0 ? 0.0 : -1.0;
      if (std::abs(game.utility(i, x) - expected) > 1e-12) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Theory report

std::string_view to_string(BoundKind kind) {
  return kind == BoundKind::upper ? "upper" : "lower";
}

std::string_view to_string(BoundTarget target) {
  return target == BoundTarget::t_mix ? "t_mix" : "t_rel";
}

CliqueLandscape clique_landscape(int n, const CoordinationPayoffs& payoffs) {
  if (n < 1) throw ArgumentError("clique landscape needs n >= 1");
  const double d0 = payoffs.delta0();
  const double d1 = payoffs.delta1();
  if (!(d0 > 0.0 && d1 > 0.0)) {
    throw HypothesisError("clique landscape needs delta0 > 0 and delta1 > 0");
  }
  CliqueLandscape land;
  for (int k = 0; k <= n; ++k) {
    const double zeros = n - k;
    land.phi_by_weight.push_back(
        -(zeros * (zeros - 1) / 2.0 * d0 + k * (k - 1.0) / 2.0 * d1));
  }
  land.k_continuous = (n - 1) * d0 / (d0 + d1) + 0.5;
  land.k_star = std::clamp(static_cast<int>(std::floor(land.k_continuous + 0.5)), 0, n);
  land.k_argmax = static_cast<int>(
      std::max_element(land.phi_by_weight.begin(), land.phi_by_weight.end()) -
      land.phi_by_weight.begin());
  land.zeta = land.phi_by_weight[land.k_star] -
              std::max(land.phi_by_weight.front(), land.phi_by_weight.back());
  return land;
}

StructureMetrics structure_metrics(const Game& game) {
  StructureMetrics metrics;
  try {
    metrics.phi = potential_of(game);
  } catch (const NotPotentialError&) {
  }
  if (metrics.phi) {
    metrics.stats = potential_stats(*metrics.phi, game.space());
    metrics.hill = zeta(*metrics.phi, game.space());
  }
  if (const auto& coord = game.coordination();
      coord && coord->graph.vertices() <= kCutwidthMaxVertices) {
    metrics.cutwidth = cutwidth(coord->graph);
  }
  return metrics;
}

ExactQuantities exact_quantities(const Game& game, double beta, double eps,
                                 std::size_t cap) {
  const LogitChain chain(game, beta);
  const TransitionMatrix p = transition_matrix(chain);
  std::optional<PotentialTable> phi;
  try {
    phi = potential_of(game);
  } catch (const NotPotentialError&) {
  }
  const Distribution pi = phi ? gibbs(*phi, beta) : stationary(p);

  ExactQuantities exact;
  // Step row by row first; slow chains on small spaces switch to squaring.
  const std::size_t steps = std::min(cap, kSteppingLimit);
  try {
    exact.t_mix = exact_mixing_time(p, pi, eps, steps).t_mix;
  } catch (const TruncationError&) {
    if (steps == cap || p.size() > kSquaringMaxStates) throw;
    exact.t_mix = mixing_time_by_squaring(p, pi, eps, cap).t_mix;
  }
  exact.pi_min = *std::min_element(pi.begin(), pi.end());
  try {
    exact.t_rel = spectrum(p, pi).t_rel;
  } catch (const NotReversibleError&) {
  }
  if (!phi) {
    // Level sets of -ln(pi) stand in for the potential.
    PotentialTable surrogate;
    for (double v : pi) surrogate.values.push_back(-std::log(v));
    phi = std::move(surrogate);
  }
  exact.bottleneck = best_bottleneck(p, pi, *phi, game.space(), eps);
  return exact;
}

const BoundEntry* BoundsReport::find(std::string_view id) const {
  for (const BoundEntry& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

bool BoundsReport::all_satisfied() const {
  return std::all_of(entries.begin(), entries.end(), [](const BoundEntry& e) {
    return !e.satisfied.has_value() || *e.satisfied;
  });
}

namespace {

void judge(BoundEntry& e, const ExactQuantities& exact) {
  if (!e.applicable) return;
  if (e.target == BoundTarget::t_mix && exact.t_mix) {
    const double t = static_cast<double>(*exact.t_mix);
    e.exact = t;
    e.satisfied = e.kind == BoundKind::upper ? t <= std::ceil(e.value)
                                             : t >= std::ceil(e.value - 1e-9);
  } else if (e.target == BoundTarget::t_rel && exact.t_rel) {
    const double t = *exact.t_rel;
    e.exact = t;
    e.satisfied = e.kind == BoundKind::upper ? t <= e.value * (1.0 + 1e-9)
                                             : t >= e.value * (1.0 - 1e-9);
  }
}

BoundEntry entry(std::string id, std::string formula, BoundKind kind,
                 BoundTarget target) {
  BoundEntry e;
  e.id = std::move(id);
  e.formula = std::move(formula);
  e.kind = kind;
  e.target = target;
  return e;
}

void apply(BoundEntry& e, double value, std::string reason) {
  e.applicable = true;
  e.value = value;
  e.reason = std::move(reason);
}

}  // namespace

BoundsReport theory_report(const Game& game, double beta, double eps,
                           const StructureMetrics& metrics,
                           const ExactQuantities& exact) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw ArgumentError("beta must be finite and non-negative");
  }
  if (!(eps > 0.0 && eps < 1.0)) throw ArgumentError("epsilon must lie in (0, 1)");

  const ProfileSpace& space = game.space();
  const double n = space.players();
  const double m = space.max_radix();
  const double log_eps = std::log(1.0 / eps);
  const bool potential = metrics.stats.has_value();
  const std::string no_potential = "game has no exact potential";

  BoundsReport report;
  report.beta = beta;
  report.eps = eps;
  auto& out = report.entries;

  {
    auto e = entry("delta_phi_tmix",
                   "2*m*n*exp(beta*DeltaPhi)*(ln(1/eps) + beta*DeltaPhi + n*ln(m))",
                   BoundKind::upper, BoundTarget::t_mix);
    if (potential) {
      const double d = metrics.stats->global_variation;
      apply(e,
            2.0 * m * n * std::exp(beta * d) *
                (log_eps + beta * d + n * std::log(m)),
            "potential game, DeltaPhi = " + fmt(d));
    } else {
      e.reason = no_potential;
    }
    out.push_back(std::move(e));
  }
  {
    auto e = entry("delta_phi_trel", "2*m*n*exp(beta*DeltaPhi)", BoundKind::upper,
                   BoundTarget::t_rel);
    if (potential) {
      const double d = metrics.stats->global_variation;
      apply(e, 2.0 * m * n * std::exp(beta * d),
            "potential game, DeltaPhi = " + fmt(d));
    } else {
      e.reason = no_potential;
    }
    out.push_back(std::move(e));
  }
  {
    auto e = entry("small_beta_tmix",
                   "ceil((ln(n) + ln(1/eps))/alpha), alpha = (1 - c)/n, "
                   "c = beta*n*deltaPhi < 1",
                   BoundKind::upper, BoundTarget::t_mix);
    if (!potential) {
      e.reason = no_potential;
    } else {
      const double c = beta * n * metrics.stats->local_variation;
      if (c < 1.0) {
        const double alpha = (1.0 - c) / n;
        apply(e, std::ceil((std::log(n) + log_eps) / alpha),
              "c = beta*n*deltaPhi = " + fmt(c) + " < 1");
      } else {
        e.reason = "c = beta*n*deltaPhi = " + fmt(c) + " is not below 1";
      }
    }
    out.push_back(std::move(e));
  }
  {
    auto rel = entry("zeta_trel", "n*m^(2n+1)*exp(beta*zeta)", BoundKind::upper,
                     BoundTarget::t_rel);
    auto mix = entry("zeta_tmix",
                     "ceil(n*m^(2n+1)*exp(beta*zeta)*(ln(1/eps) + beta*DeltaPhi + ln|S|))",
                     BoundKind::upper, BoundTarget::t_mix);
    if (potential && metrics.hill) {
      const double z = metrics.hill->zeta;
      const double t_rel = n * std::pow(m, 2.0 * n + 1.0) * std::exp(beta * z);
      const std::string why = "potential game, zeta = " + fmt(z);
      apply(rel, t_rel, why);
      apply(mix,
            std::ceil(t_rel * (log_eps + beta * metrics.stats->global_variation +
                               std::log(static_cast<double>(space.size())))),
            why);
    } else {
      rel.reason = mix.reason = no_potential;
    }
    out.push_back(std::move(rel));
    out.push_back(std::move(mix));
  }
  {
    auto e = entry("dominant_tmix",
                   "k*t_star, t_star = max(1, ceil(2*n*ln(n))), k = ceil(2*m^n*ln(1/eps))",
                   BoundKind::upper, BoundTarget::t_mix);
    if (const auto d = dominant_profile(game)) {
      const double t_star = std::max(1.0, std::ceil(2.0 * n * std::log(n)));
      const double k = std::ceil(2.0 * std::pow(m, n) * log_eps);
      apply(e, k * t_star,
            "dominant profile at state " + std::to_string(*d));
    } else {
      e.reason = "no dominant profile";
    }
    out.push_back(std::move(e));
  }
  {
    auto e = entry("dominant_lower",
                   "(1 - 2*eps)/2*(m^n - 1)/(m - 1), beta > ln(m^n - 1)",
                   BoundKind::lower, BoundTarget::t_mix);
    if (!is_dominant_family(game)) {
      e.reason = "utilities are not those of the dominant-strategy family";
    } else {
      const double states = std::pow(m, n);
      const double threshold = std::log(states - 1.0);
      if (beta > threshold) {
        apply(e, (1.0 - 2.0 * eps) / 2.0 * (states - 1.0) / (m - 1.0),
              "beta > ln(m^n - 1) = " + fmt(threshold));
      } else {
        e.reason = "beta <= ln(m^n - 1) = " + fmt(threshold);
      }
    }
    out.push_back(std::move(e));
  }

  const auto& coord = game.coordination();
  {
    auto mix = entry("graphical_tmix",
                     "2*n^3*exp(chi*(delta0 + delta1)*beta)*(n*delta0*beta + 1), "
                     "delta0 = max(delta0, delta1)",
                     BoundKind::upper, BoundTarget::t_mix);
    auto rel = entry("graphical_trel", "2*n^2*exp(chi*(delta0 + delta1)*beta)",
                     BoundKind::upper, BoundTarget::t_rel);
    if (coord && metrics.cutwidth) {
      const double d0 = coord->payoffs.delta0();
      const double d1 = coord->payoffs.delta1();
      const double hi = std::max(d0, d1);
      const double chi = metrics.cutwidth->cutwidth;
      const double grow = std::exp(chi * (d0 + d1) * beta);
      const std::string why = "coordination game, cutwidth = " + fmt(chi);
      apply(mix, 2.0 * n * n * n * grow * (n * hi * beta + 1.0), why);
      apply(rel, 2.0 * n * n * grow, why);
    } else {
      mix.reason = rel.reason =
          coord ? "cutwidth unavailable" : "not a graphical coordination game";
    }
    out.push_back(std::move(mix));
    out.push_back(std::move(rel));
  }
  {
    auto upper = entry("ring_tmix",
                       "ceil((ln(n) + ln(1/eps))*n*(1 + exp(2*delta*beta))/2)",
                       BoundKind::upper, BoundTarget::t_mix);
    auto lower = entry("ring_lower", "(1 - 2*eps)*(1 + exp(2*delta*beta))/2",
                       BoundKind::lower, BoundTarget::t_mix);
    if (!coord || !coord->graph.is_ring()) {
      upper.reason = lower.reason = "social graph is not a ring";
    } else if (std::abs(coord->payoffs.delta0() - coord->payoffs.delta1()) > 1e-12) {
      upper.reason = lower.reason = "delta0 != delta1";
    } else {
      const double g = 1.0 + std::exp(2.0 * coord->payoffs.delta0() * beta);
      apply(upper, std::ceil((std::log(n) + log_eps) * n * g / 2.0),
            "ring with delta0 = delta1");
      apply(lower, (1.0 - 2.0 * eps) * g / 2.0, "ring with delta0 = delta1");
    }
    out.push_back(std::move(upper));
    out.push_back(std::move(lower));
  }
  {
    auto lower = entry("relaxation_lower", "ceil((t_rel - 1)*ln(1/(2*eps)))",
                       BoundKind::lower, BoundTarget::t_mix);
    auto upper = entry("relaxation_upper", "ceil(t_rel*ln(1/(eps*pi_min)))",
                       BoundKind::upper, BoundTarget::t_mix);
    if (exact.t_rel && exact.pi_min) {
      const std::string why = "exact t_rel = " + fmt(*exact.t_rel);
      apply(lower, (*exact.t_rel - 1.0) * std::log(1.0 / (2.0 * eps)), why);
      apply(upper, *exact.t_rel * std::log(1.0 / (eps * *exact.pi_min)), why);
    } else {
      lower.reason = upper.reason = "exact relaxation time unavailable";
    }
    out.push_back(std::move(lower));
    out.push_back(std::move(upper));
  }
  {
    auto e = entry("bottleneck_lower", "(1 - 2*eps)/(2*B(R))", BoundKind::lower,
                   BoundTarget::t_mix);
    if (exact.bottleneck) {
      const auto& b = *exact.bottleneck;
      apply(e, b.result.lower_bound,
            b.set.family + " set (parameter " + fmt(b.set.parameter) +
                ", |R| = " + std::to_string(b.set.states.size()) +
                "), B(R) = " + fmt(b.result.ratio));
    } else {
      e.reason = "no candidate set with pi(R) <= 1/2";
    }
    out.push_back(std::move(e));
  }

  if (coord && coord->graph.is_clique()) {
    report.clique = clique_landscape(coord->graph.vertices(), coord->payoffs);
  }
  for (BoundEntry& e : out) judge(e, exact);
  return report;
}

// ---------------------------------------------------------------------------
// Canonical paths

StatePath canonical_path(const ProfileSpace& space, std::span<const int> ordering,
                         StateIndex x, StateIndex y) {
  positions_of(ordering, space.players());
  if (x >= space.size() || y >= space.size()) throw RangeError("state out of range");
  StatePath path{x};
  StateIndex current = x;
  for (int i : ordering) {
    const int target = space.strategy(y, i);
    if (space.strategy(current, i) != target) {
      current = space.with_strategy(current, i, target);
      path.push_back(current);
    }
  }
  return path;
}

PathSet canonical_paths(const ProfileSpace& space, std::span<const int> ordering) {
  require_budget(space.size(), kPathSetBudget, "canonical path set");
  PathSet paths;
  paths.reserve(space.size() * (space.size() - 1));
  for (StateIndex x = 0; x < space.size(); ++x) {
    for (StateIndex y = 0; y < space.size(); ++y) {
      if (x != y) paths.push_back({x, y, canonical_path(space, ordering, x, y)});
    }
  }
  return paths;
}

StateIndex f_edge(const ProfileSpace& space, std::span<const int> ordering,
                  StateIndex u, StateIndex v, StateIndex x, StateIndex y,
                  std::span<const double> pi) {
  require_pi(pi, space.size(), "f_edge");
  const std::vector<int> position = positions_of(ordering, space.players());
  const StatePath path = canonical_path(space, ordering, x, y);
  bool on_path = false;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (path[k] == u && path[k + 1] == v) on_path = true;
  }
  if (!on_path) throw ArgumentError("edge is not on the canonical path of (x, y)");
  const int i = space.differing_player(u, v);
  const int p = position[i];
  const bool low_start = pi[u] <= pi[v];
  StateIndex z = 0;
  for (int j = 0; j < space.players(); ++j) {
    const bool from_x = position[j] < p || (position[j] == p && !low_start);
    z += static_cast<StateIndex>(space.strategy(from_x ? x : y, j)) * space.stride(j);
  }
  return z;
}

namespace {

// Accumulates weight * |path| on every directed edge of each path; returns
// the worst load / Q.
template <typename Weight>
CongestionReport worst_edge(const DenseMatrix& q, const PathSet& paths,
                            Weight weight) {
  const std::size_t n = q.size();
  std::vector<double> load(n * n, 0.0);
  for (const PathEntry& entry : paths) {
    const StatePath& s = entry.states;
    if (s.empty() || s.front() != entry.from || s.back() != entry.to) {
      throw ArgumentError("path does not connect its endpoints");
    }
    const double w = weight(entry) * static_cast<double>(s.size() - 1);
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
      if (s[k] >= n || s[k + 1] >= n) throw RangeError("path state out of range");
      if (s[k] == s[k + 1] || !(q(s[k], s[k + 1]) > 0.0)) {
        throw ArgumentError("path uses a pair that is not an edge of the chain (" +
                            std::to_string(s[k]) + ", " + std::to_string(s[k + 1]) +
                            ")");
      }
      load[s[k] * n + s[k + 1]] += w;
    }
  }
  CongestionReport report;
  for (StateIndex u = 0; u < n; ++u) {
    for (StateIndex v = 0; v < n; ++v) {
      const double l = load[u * n + v];
      if (l == 0.0) continue;
      const double ratio = l / q(u, v);
      if (ratio > report.value) report = {ratio, u, v};
    }
  }
  return report;
}

}  // namespace

CongestionReport congestion(const DenseMatrix& q, std::span<const double> pi,
                            const PathSet& paths) {
  require_pi(pi, q.size(), "congestion");
  return worst_edge(q, paths, [&](const PathEntry& e) {
    return pi[e.from] * pi[e.to];
  });
}

PathSet admissible_paths(const ProfileSpace& space, const PotentialTable& phi) {
  if (phi.size() != space.size()) throw ShapeError("potential/space size mismatch");
  require_budget(space.size(), kPathSetBudget, "admissible path set");
  PathSet paths;
  for (StateIndex u = 0; u < space.size(); ++u) {
    space.for_each_neighbor(u, [&](StateIndex v, int j, int) {
      StateIndex z = space.with_strategy(u, j, 0);
      for (int s = 1; s < space.radix(j); ++s) {
        const StateIndex w = space.with_strategy(u, j, s);
        if (phi[w] < phi[z]) z = w;
      }
      if (phi[u] == phi[z] || phi[v] == phi[z]) {
        paths.push_back({u, v, {u, v}});
      } else {
        paths.push_back({u, v, {u, z, v}});
      }
    });
  }
  return paths;
}

ComparisonReport congestion_ratio(const DenseMatrix& q, std::span<const double> pi,
                                  const DenseMatrix& q_hat,
                                  std::span<const double> pi_hat,
                                  const PathSet& paths) {
  const std::size_t n = q.size();
  if (q_hat.size() != n) throw ShapeError("chains live on different state spaces");
  require_pi(pi, n, "congestion_ratio");
  require_pi(pi_hat, n, "congestion_ratio");

  std::vector<bool> covered(n * n, false);
  std::size_t hat_edges = 0;
  for (StateIndex x = 0; x < n; ++x) {
    for (StateIndex y = 0; y < n; ++y) {
      if (x != y && q_hat(x, y) > 0.0) ++hat_edges;
    }
  }
  for (const PathEntry& e : paths) {
    if (e.from >= n || e.to >= n || e.from == e.to || !(q_hat(e.from, e.to) > 0.0)) {
      throw ArgumentError("path set entry is not an edge of the comparison chain");
    }
    if (covered[e.from * n + e.to]) {
      throw ArgumentError("comparison chain edge has more than one path");
    }
    covered[e.from * n + e.to] = true;
  }
  if (paths.size() != hat_edges) {
    throw ArgumentError("path set does not cover every comparison chain edge");
  }

  const CongestionReport worst = worst_edge(
      q, paths, [&](const PathEntry& e) { return q_hat(e.from, e.to); });
  ComparisonReport report{worst.value, 0.0, worst.edge_from, worst.edge_to};
  for (StateIndex x = 0; x < n; ++x) {
    report.gamma = std::max(report.gamma, pi[x] / pi_hat[x]);
  }
  return report;
}

}  // namespace logitlab
