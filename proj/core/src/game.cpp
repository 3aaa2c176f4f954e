#include "logitlab/game.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "logitlab/error.hpp"

namespace logitlab {

std::string_view to_string(GameKind kind) {
  switch (kind) {
    case GameKind::generic:
      return "generic";
    case GameKind::potential:
      return "potential";
    case GameKind::coordination:
      return "coordination";
  }
  return "generic";
}

// ---------------------------------------------------------------------------
// SocialGraph

SocialGraph::SocialGraph(int vertices, std::vector<Edge> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
  if (vertices_ < 1) throw GraphError("graph needs at least one vertex");
  std::set<Edge> seen;
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertices_ || v >= vertices_) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint out of range");
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw GraphError("duplicate edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
    }
  }
  adjacency_.resize(static_cast<std::size_t>(vertices_));
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
}

SocialGraph SocialGraph::ring(int n) {
  if (n < 3) throw GraphError("a ring needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return SocialGraph(n, std::move(edges));
}

SocialGraph SocialGraph::clique(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return SocialGraph(n, std::move(edges));
}

SocialGraph SocialGraph::path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return SocialGraph(n, std::move(edges));
}

bool SocialGraph::is_ring() const {
  if (vertices_ < 3 || static_cast<int>(edges_.size()) != vertices_) {
    return false;
  }
  for (const auto& adj : adjacency_) {
    if (adj.size() != 2) return false;
  }
  // 2-regular with n edges: a ring iff connected.
  std::vector<bool> seen(static_cast<std::size_t>(vertices_), false);
  int prev = -1;
  int cur = 0;
  int visited = 0;
  while (!seen[cur]) {
    seen[cur] = true;
    ++visited;
    const int next = adjacency_[cur][0] != prev ? adjacency_[cur][0]
                                                : adjacency_[cur][1];
    prev = cur;
    cur = next;
  }
  return visited == vertices_;
}

bool SocialGraph::is_clique() const {
  const auto n = static_cast<std::size_t>(vertices_);
  return edges_.size() == n * (n - 1) / 2;
}

// ---------------------------------------------------------------------------
// Game

Game::Game(ProfileSpace space, GameKind kind, std::vector<double> table)
    : space_(std::move(space)), kind_(kind), table_(std::move(table)) {}

Game::Game(std::vector<int> radices, std::vector<std::vector<double>> utilities)
    : space_(std::move(radices)) {
  if (utilities.size() != static_cast<std::size_t>(space_.players())) {
    throw ShapeError("expected " + std::to_string(space_.players()) +
                     " utility arrays, got " +
                     std::to_string(utilities.size()));
  }
  table_.reserve(space_.players() * space_.size());
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    if (utilities[i].size() != space_.size()) {
      throw ShapeError("utility array of player " + std::to_string(i) +
                       " has length " + std::to_string(utilities[i].size()) +
                       ", expected " + std::to_string(space_.size()));
    }
    table_.insert(table_.end(), utilities[i].begin(), utilities[i].end());
  }
}

Game::Game(std::vector<int> radices, UtilityFn utility)
    : space_(std::move(radices)), callback_(std::move(utility)) {
  if (!callback_) throw ArgumentError("utility callback is empty");
}

Game Game::from_potential(std::vector<int> radices, PotentialTable phi) {
  ProfileSpace space(std::move(radices));
  if (phi.size() != space.size()) {
    throw ShapeError("potential table has length " +
                     std::to_string(phi.size()) + ", expected " +
                     std::to_string(space.size()));
  }
  std::vector<double> table;
  table.reserve(space.players() * space.size());
  for (int i = 0; i < space.players(); ++i) {
    for (double v : phi.values) table.push_back(-v);
  }
  Game game(std::move(space), GameKind::potential, std::move(table));
  game.potential_ = std::move(phi);
  return game;
}

Game Game::from_coordination(SocialGraph graph, CoordinationPayoffs payoffs) {
  const int n = graph.vertices();
  ProfileSpace space(std::vector<int>(static_cast<std::size_t>(n), 2));
  const std::size_t size = space.size();
  std::vector<double> table(static_cast<std::size_t>(n) * size, 0.0);
  PotentialTable phi{std::vector<double>(size, 0.0)};
  for (StateIndex x = 0; x < size; ++x) {
    for (int i = 0; i < n; ++i) {
      double u = 0.0;
      const int own = space.strategy(x, i);
      for (int j : graph.neighbors(i)) u += payoffs.payoff(own, space.strategy(x, j));
      table[i * size + x] = u;
    }
    double p = 0.0;
    for (const auto& [u, v] : graph.edges()) {
      p += payoffs.edge_potential(space.strategy(x, u), space.strategy(x, v));
    }
    phi.values[x] = p;
  }
  Game game(std::move(space), GameKind::coordination, std::move(table));
  game.potential_ = std::move(phi);
  game.coordination_ = CoordinationStructure{std::move(graph), payoffs};
  return game;
}

Game Game::with_potential(PotentialTable phi) const {
  if (phi.size() != size()) {
    throw ShapeError("potential table has length " +
                     std::to_string(phi.size()) + ", expected " +
                     std::to_string(size()));
  }
  Game copy = *this;
  copy.potential_ = std::move(phi);
  if (copy.kind_ == GameKind::generic) copy.kind_ = GameKind::potential;
  return copy;
}

bool same_game(const Game& a, const Game& b, double tol) {
  if (a.kind() != b.kind() || !(a.space() == b.space())) return false;
  for (int i = 0; i < a.players(); ++i) {
    for (StateIndex x = 0; x < a.size(); ++x) {
      if (std::abs(a.utility(i, x) - b.utility(i, x)) > tol) return false;
    }
  }
  if (a.potential().has_value() != b.potential().has_value()) return false;
  if (a.potential()) {
    for (StateIndex x = 0; x < a.size(); ++x) {
      if (std::abs((*a.potential())[x] - (*b.potential())[x]) > tol) {
        return false;
      }
    }
  }
  if (a.coordination().has_value() != b.coordination().has_value()) {
    return false;
  }
  if (a.coordination()) {
    const auto& ca = *a.coordination();
    const auto& cb = *b.coordination();
    if (!(ca.graph == cb.graph)) return false;
    const auto close = [tol](double u, double v) { return std::abs(u - v) <= tol; };
    if (!close(ca.payoffs.a, cb.payoffs.a) || !close(ca.payoffs.b, cb.payoffs.b) ||
        !close(ca.payoffs.c, cb.payoffs.c) || !close(ca.payoffs.d, cb.payoffs.d)) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Potentials

PotentialCheck verify_potential(const Game& game, const PotentialTable& phi,
                                double tol) {
  const ProfileSpace& space = game.space();
  if (phi.size() != space.size()) {
    throw ShapeError("potential table has length " +
                     std::to_string(phi.size()) + ", expected " +
                     std::to_string(space.size()));
  }
  PotentialCheck check;
  // Along each line {(s, x_-i) : s in S_i} the quantity u_i + Phi must be
  // constant; the worst pair violation is its spread.
  for (int i = 0; i < space.players(); ++i) {
    for (StateIndex x = 0; x < space.size(); ++x) {
      if (space.strategy(x, i) != 0) continue;
      double lo = 0.0;
      double hi = 0.0;
      StateIndex arg_lo = x;
      StateIndex arg_hi = x;
      for (int s = 0; s < space.radix(i); ++s) {
        const StateIndex y = space.with_strategy(x, i, s);
        const double v = game.utility(i, y) + phi[y];
        if (s == 0 || v < lo) {
          lo = v;
          arg_lo = y;
        }
        if (s == 0 || v > hi) {
          hi = v;
          arg_hi = y;
        }
      }
      if (hi - lo > check.max_violation) {
        check.max_violation = hi - lo;
        check.player = i;
        check.state_a = arg_hi;
        check.state_b = arg_lo;
      }
    }
  }
  check.ok = check.max_violation <= tol;
  return check;
}

namespace {

// States visited by the coordinate-fixing path from 0 to x, both ends
// included.
std::vector<StateIndex> fixing_path(const ProfileSpace& space, StateIndex x) {
  std::vector<StateIndex> path{0};
  StateIndex cur = 0;
  for (int i = 0; i < space.players(); ++i) {
    const int s = space.strategy(x, i);
    if (s != 0) {
      cur = space.with_strategy(cur, i, s);
      path.push_back(cur);
    }
  }
  return path;
}

}  // namespace

PotentialTable extract_potential(const Game& game, double tol) {
  const ProfileSpace& space = game.space();
  PotentialTable phi{std::vector<double>(space.size(), 0.0)};
  for (StateIndex x = 1; x < space.size(); ++x) {
    // Last step of the fixing path changes the highest non-zero player.
    int last = space.players() - 1;
    while (space.strategy(x, last) == 0) --last;
    const StateIndex prev = space.with_strategy(x, last, 0);
    phi.values[x] = phi[prev] + game.utility(last, prev) - game.utility(last, x);
  }
  const PotentialCheck check = verify_potential(game, phi, tol);
  if (!check.ok) {
    std::vector<StateIndex> cycle = fixing_path(space, check.state_a);
    std::vector<StateIndex> back = fixing_path(space, check.state_b);
    cycle.insert(cycle.end(), back.rbegin(), back.rend());
    throw NotPotentialError(
        "not a potential game: violation " + std::to_string(check.max_violation) +
            " at player " + std::to_string(check.player),
        std::move(cycle), check.max_violation);
  }
  return phi;
}

PotentialTable potential_of(const Game& game, double tol) {
  if (game.potential()) return *game.potential();
  return extract_potential(game, tol);
}

}  // namespace logitlab
