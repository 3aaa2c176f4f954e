#include "logitlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logitlab/error.hpp"
#include "logitlab/rng.hpp"

namespace logitlab {

Game gen_graphical_coordination(SocialGraph graph, CoordinationPayoffs payoffs) {
  if (!(payoffs.delta0() > 0.0)) {
    throw HypothesisError("coordination game requires delta0 = a - d > 0, got " +
                          std::to_string(payoffs.delta0()));
  }
  if (!(payoffs.delta1() > 0.0)) {
    throw HypothesisError("coordination game requires delta1 = b - c > 0, got " +
                          std::to_string(payoffs.delta1()));
  }
  return Game::from_coordination(std::move(graph), payoffs);
}

Game gen_lbpot(int n, double g, double l) {
  if (n < 1) throw ArgumentError("lbpot needs n >= 1");
  if (!(l > 0.0) || !(2.0 * g / n <= l) || !(l <= g)) {
    throw HypothesisError("lbpot requires 2g/n <= l <= g with l > 0 (n=" +
                          std::to_string(n) + ", g=" + std::to_string(g) +
                          ", l=" + std::to_string(l) + ")");
  }
  ProfileSpace space(std::vector<int>(static_cast<std::size_t>(n), 2));
  const double c = g / l;
  PotentialTable phi{std::vector<double>(space.size())};
  for (StateIndex x = 0; x < space.size(); ++x) {
    const double w = static_cast<double>(__builtin_popcountll(x));
    phi.values[x] = -l * std::min(c, std::abs(c - w));
  }
  return Game::from_potential(std::vector<int>(space.radices().begin(),
                                               space.radices().end()),
                              std::move(phi));
}

Game gen_dominant(int n, int m) {
  if (n < 1) throw ArgumentError("dominant game needs n >= 1");
  if (m < 2) throw ArgumentError("dominant game needs m >= 2");
  std::vector<int> radices(static_cast<std::size_t>(n), m);
  ProfileSpace space(radices);
  PotentialTable phi{std::vector<double>(space.size(), 1.0)};
  phi.values[0] = 0.0;
  return Game::from_potential(std::move(radices), std::move(phi));
}

Game gen_random_potential(int n, int m, std::uint64_t seed, double range) {
  if (n < 1 || m < 1) throw ArgumentError("random potential needs n, m >= 1");
  if (!(range >= 0.0) || !std::isfinite(range)) {
    throw ArgumentError("range must be finite and non-negative");
  }
  std::vector<int> radices(static_cast<std::size_t>(n), m);
  ProfileSpace space(radices);
  SplitMix64 rng(seed);
  PotentialTable phi{std::vector<double>(space.size())};
  for (double& v : phi.values) v = range * rng.uniform();
  return Game::from_potential(std::move(radices), std::move(phi));
}

std::optional<GameFamily> parse_family(const std::string& name) {
  if (name == "coordination") return GameFamily::coordination;
  if (name == "lbpot") return GameFamily::lbpot;
  if (name == "dominant") return GameFamily::dominant;
  if (name == "random" || name == "random_potential") {
    return GameFamily::random_potential;
  }
  return std::nullopt;
}

std::optional<GraphShape> parse_graph_shape(const std::string& name) {
  if (name == "ring") return GraphShape::ring;
  if (name == "clique") return GraphShape::clique;
  if (name == "path") return GraphShape::path;
  return std::nullopt;
}

SocialGraph make_graph(GraphShape shape, int n) {
  switch (shape) {
    case GraphShape::ring:
      return SocialGraph::ring(n);
    case GraphShape::clique:
      return SocialGraph::clique(n);
    case GraphShape::path:
      return SocialGraph::path(n);
  }
  throw ArgumentError("unknown graph shape");
}

Game generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case GameFamily::coordination:
      return gen_graphical_coordination(make_graph(spec.graph, spec.n),
                                        spec.payoffs);
    case GameFamily::lbpot:
      return gen_lbpot(spec.n, spec.g, spec.l);
    case GameFamily::dominant:
      return gen_dominant(spec.n, spec.m);
    case GameFamily::random_potential:
      return gen_random_potential(spec.n, spec.m, spec.seed, spec.range);
  }
  throw ArgumentError("unknown game family");
}

}  // namespace logitlab
