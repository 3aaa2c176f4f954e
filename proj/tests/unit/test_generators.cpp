#include <doctest.h>

#include <cmath>

#include "logitlab/error.hpp"
#include "logitlab/exact.hpp"
#include "logitlab/generators.hpp"
#include "logitlab/logit.hpp"
#include "logitlab/metrics.hpp"

using namespace logitlab;

namespace {

std::vector<double> by_weight(const Game& g) {
  std::vector<double> out(static_cast<std::size_t>(g.players()) + 1, NAN);
  for (StateIndex x = 0; x < g.size(); ++x) {
    out[static_cast<std::size_t>(__builtin_popcountll(x))] = (*g.potential())[x];
  }
  return out;
}

}  // namespace

TEST_CASE("graphical coordination examples") {
  const Game edge = gen_graphical_coordination(SocialGraph(2, {{0, 1}}), {1, 1, 0, 0});
  CHECK(edge.potential()->values == std::vector<double>{-1, 0, 0, -1});

  const Game clique = gen_graphical_coordination(SocialGraph::clique(4), {1, 1, 0, 0});
  CHECK((*clique.potential())[0b0011] == -2.0);
  CHECK((*clique.potential())[0b1010] == -2.0);

  const Game ring = gen_graphical_coordination(SocialGraph::ring(3), {1, 1, 0, 0});
  CHECK((*ring.potential())[0b111] == -3.0);

  CHECK_THROWS_AS(gen_graphical_coordination(SocialGraph::ring(3), {0, 1, 0, 1}),
                  HypothesisError);
  CHECK_THROWS_AS(gen_graphical_coordination(SocialGraph::ring(3), {1, 0, 0, 0}),
                  HypothesisError);
}

TEST_CASE("lbpot examples") {
  const Game g = gen_lbpot(4, 2, 1);
  CHECK(by_weight(g) == std::vector<double>{-2, -1, 0, -1, -2});
  const PotentialStats stats = potential_stats(*g.potential(), g.space());
  CHECK(stats.global_variation == 2.0);
  CHECK(stats.local_variation == 1.0);
  CHECK(by_weight(gen_lbpot(2, 1, 1)) == std::vector<double>{-1, 0, -1});
  CHECK_THROWS_AS(gen_lbpot(4, 2, 0.5), HypothesisError);
  CHECK_THROWS_AS(gen_lbpot(4, 2, 3), HypothesisError);
}

TEST_CASE("lbpot is symmetric about c and certifies") {
  for (int n = 2; n <= 8; ++n) {
    for (double g = 1; g <= n / 2.0; g += 1) {
      const Game game = gen_lbpot(n, g, std::max(1.0, 2.0 * g / n));
      CHECK(verify_potential(game, *game.potential(), 1e-12).ok);
      const double c = g / std::max(1.0, 2.0 * g / n);
      for (StateIndex x = 0; x < game.size(); ++x) {
        for (StateIndex y = 0; y < game.size(); ++y) {
          const double wx = __builtin_popcountll(x), wy = __builtin_popcountll(y);
          if (std::abs(std::abs(wx - c) - std::abs(wy - c)) < 1e-12) {
            CHECK((*game.potential())[x] == (*game.potential())[y]);
          }
        }
      }
    }
  }
}

TEST_CASE("dominant family") {
  const Game g = gen_dominant(2, 2);
  for (double beta : {0.0, 0.5, 3.0, 40.0}) {
    const LogitChain chain(g, beta);
    for (StateIndex x = 0; x < g.size(); ++x) {
      for (int i = 0; i < 2; ++i) CHECK(update_distribution(chain, x, i)[0] >= 0.5);
    }
  }
  CHECK(potential_stats(*g.potential(), g.space()).global_variation == 1.0);
  const Game three = gen_dominant(3, 2);
  CHECK(gibbs(*three.potential(), 60.0)[1] < 1e-25);
  CHECK(verify_potential(gen_dominant(3, 3), *gen_dominant(3, 3).potential(), 1e-12).ok);
  CHECK_THROWS_AS(gen_dominant(2, 1), ArgumentError);
  CHECK_THROWS_AS(gen_dominant(0, 2), ArgumentError);
}

TEST_CASE("random potential determinism") {
  const Game a = gen_random_potential(3, 2, 1);
  const Game b = gen_random_potential(3, 2, 1);
  CHECK(a.potential()->values == b.potential()->values);
  CHECK(verify_potential(a, *a.potential(), 1e-12).ok);
  CHECK(a.potential()->values != gen_random_potential(3, 2, 2).potential()->values);
  const Game wide = gen_random_potential(2, 3, 9, 4.0);
  for (double v : wide.potential()->values) {
    CHECK(v >= 0.0);
    CHECK(v <= 4.0);
  }
  CHECK_THROWS_AS(gen_random_potential(21, 2, 1), BudgetError);
}

TEST_CASE("generator spec dispatch") {
  GeneratorSpec spec;
  spec.family = *parse_family("lbpot");
  spec.n = 4;
  spec.g = 2;
  spec.l = 1;
  CHECK(same_game(generate(spec), gen_lbpot(4, 2, 1)));
  spec.family = *parse_family("coordination");
  spec.graph = *parse_graph_shape("clique");
  CHECK(same_game(generate(spec),
                  gen_graphical_coordination(SocialGraph::clique(4), {1, 1, 0, 0})));
  CHECK_FALSE(parse_family("nonsense"));
  CHECK_FALSE(parse_graph_shape("torus"));
}
