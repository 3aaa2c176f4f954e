#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "logitlab/game.hpp"

namespace logitlab {

/// Graphical coordination game on `graph`. Requires delta0 = a - d > 0 and
/// delta1 = b - c > 0 (HypothesisError otherwise). Labels are not swapped
/// to enforce delta0 >= delta1.
Game gen_graphical_coordination(SocialGraph graph, CoordinationPayoffs payoffs);

/// Binary n-player potential Phi(x) = -l * min(c, |c - w(x)|), c = g / l,
/// w(x) the number of ones. Requires 2g/n <= l <= g and l > 0.
Game gen_lbpot(int n, double g, double l);

/// u_i(x) = 0 at the all-zero profile and -1 elsewhere; strategy 0 is
/// dominant for everyone. Potential Phi(0) = 0, Phi(x) = 1 otherwise.
Game gen_dominant(int n, int m);

/// Phi(x) i.i.d. uniform in [0, range], drawn in state-index order from
/// SplitMix64(seed); utilities u_i = -Phi.
Game gen_random_potential(int n, int m, std::uint64_t seed, double range = 1.0);

enum class GameFamily { coordination, lbpot, dominant, random_potential };

enum class GraphShape { ring, clique, path };

std::optional<GameFamily> parse_family(const std::string& name);
std::optional<GraphShape> parse_graph_shape(const std::string& name);
SocialGraph make_graph(GraphShape shape, int n);

/// Family tag plus the union of every family's parameters.
struct GeneratorSpec {
  GameFamily family = GameFamily::random_potential;
  int n = 2;
  int m = 2;
  double g = 1.0;
  double l = 1.0;
  GraphShape graph = GraphShape::ring;
  CoordinationPayoffs payoffs{1.0, 1.0, 0.0, 0.0};
  std::uint64_t seed = 1;
  double range = 1.0;
};

Game generate(const GeneratorSpec& spec);

}  // namespace logitlab
