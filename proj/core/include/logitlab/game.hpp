#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "logitlab/profile.hpp"

namespace logitlab {

inline constexpr double kPotentialTolerance = 1e-9;

enum class GameKind { generic, potential, coordination };

std::string_view to_string(GameKind kind);

/// Phi(x) for every x in S, indexed by state index. Lower potential means
/// higher utility: u_i(a, x_-i) - u_i(b, x_-i) = Phi(b, x_-i) - Phi(a, x_-i).
struct PotentialTable {
  std::vector<double> values;

  double operator[](StateIndex x) const { return values[x]; }
  std::size_t size() const { return values.size(); }
};

/// Simple undirected graph on vertices [0, vertices).
class SocialGraph {
 public:
  using Edge = std::pair<int, int>;

  /// Edges are normalised to (min, max). Throws GraphError on self-loops,
  /// duplicates, or endpoints out of range.
  SocialGraph(int vertices, std::vector<Edge> edges);

  static SocialGraph ring(int n);
  static SocialGraph clique(int n);
  static SocialGraph path(int n);

  int vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  /// True when the graph is a single cycle through all vertices (n >= 3).
  bool is_ring() const;
  bool is_clique() const;

  bool operator==(const SocialGraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  int vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// The 2x2 coordination game: (own, other) -> payoff
/// (0,0) -> a, (0,1) -> c, (1,0) -> d, (1,1) -> b.
struct CoordinationPayoffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double delta0() const { return a - d; }
  double delta1() const { return b - c; }

  double payoff(int own, int other) const {
    if (own == 0) return other == 0 ? a : c;
    return other == 0 ? d : b;
  }

  /// Edge potential: -delta0 on (0,0), -delta1 on (1,1), 0 otherwise.
  double edge_potential(int s, int t) const {
    if (s != t) return 0.0;
    return s == 0 ? -delta0() : -delta1();
  }

  bool operator==(const CoordinationPayoffs&) const = default;
};

struct CoordinationStructure {
  SocialGraph graph;
  CoordinationPayoffs payoffs;
};

using UtilityFn = std::function<double(int player, StateIndex x)>;

/// A finite strategic game. Immutable after construction.
///
/// Utilities are either a dense player-major table (entry i * |S| + x) or a
/// callback. Potential and coordination games also carry their potential
/// table, and coordination games their social graph and payoffs.
class Game {
 public:
  /// Generic game from one utility array per player.
  Game(std::vector<int> radices, std::vector<std::vector<double>> utilities);

  /// Generic game whose utilities are evaluated on demand.
  Game(std::vector<int> radices, UtilityFn utility);

  /// Potential game with u_i = -Phi for every player.
  static Game from_potential(std::vector<int> radices, PotentialTable phi);

  /// Graphical coordination game: utilities are sums over incident edges,
  /// the attached potential is the sum of edge potentials.
  static Game from_coordination(SocialGraph graph, CoordinationPayoffs payoffs);

  /// Same utilities, with `phi` attached and the kind set to potential.
  /// Throws ShapeError on a size mismatch. Does not check the potential;
  /// callers use verify_potential for that.
  Game with_potential(PotentialTable phi) const;

  GameKind kind() const { return kind_; }
  const ProfileSpace& space() const { return space_; }
  int players() const { return space_.players(); }
  std::size_t size() const { return space_.size(); }

  double utility(int player, StateIndex x) const {
    return table_.empty() ? callback_(player, x) : table_[player * size() + x];
  }

  bool has_dense_utilities() const { return !table_.empty(); }
  const std::optional<PotentialTable>& potential() const { return potential_; }
  const std::optional<CoordinationStructure>& coordination() const {
    return coordination_;
  }

 private:
  Game(ProfileSpace space, GameKind kind, std::vector<double> table);

  ProfileSpace space_;
  GameKind kind_ = GameKind::generic;
  std::vector<double> table_;
  UtilityFn callback_;
  std::optional<PotentialTable> potential_;
  std::optional<CoordinationStructure> coordination_;
};

/// Field-by-field comparison; utilities and potentials within `tol`.
bool same_game(const Game& a, const Game& b, double tol = 1e-12);

struct PotentialCheck {
  bool ok = true;
  double max_violation = 0.0;
  // Witness of the worst violation: player and the two profiles (a, x_-i)
  // and (b, x_-i).
  int player = -1;
  StateIndex state_a = 0;
  StateIndex state_b = 0;
};

/// Checks u_i(a,x_-i) - u_i(b,x_-i) = Phi(b,x_-i) - Phi(a,x_-i) for all
/// players, profiles and strategy pairs. Throws ShapeError on size mismatch.
PotentialCheck verify_potential(const Game& game, const PotentialTable& phi,
                                double tol = kPotentialTolerance);

/// Integrates utility differences along the coordinate-fixing path from the all-zero
/// profile (player 0 first), anchored at Phi(0,...,0) = 0, then verifies.
/// Throws NotPotentialError with a witness cycle on failure.
PotentialTable extract_potential(const Game& game,
                                 double tol = kPotentialTolerance);

/// The attached potential if present, otherwise extract_potential.
PotentialTable potential_of(const Game& game, double tol = kPotentialTolerance);

}  // namespace logitlab
