#include <doctest.h>

#include <cmath>

#include "logitlab/error.hpp"
#include "logitlab/generators.hpp"
#include "logitlab/logit.hpp"
#include "../support/oracles.hpp"

using namespace logitlab;

namespace {

Game single_edge() {
  return gen_graphical_coordination(SocialGraph(2, {{0, 1}}), {1, 1, 0, 0});
}

}  // namespace

TEST_CASE("update distribution examples") {
  const Game uniform3(std::vector<int>{3}, {{0.0, 5.0, -2.0}});
  const auto flat = update_distribution(LogitChain(uniform3, 0.0), 0, 0);
  for (double v : flat) CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  const Game g = single_edge();
  const LogitChain chain(g, std::log(3.0));
  // The first player faces an opponent on 1, so u = (c, b) = (0, 1).
  const auto sigma = update_distribution(chain, Profile{0, 1}, 0);
  CHECK(sigma[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(sigma[1] == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("update distribution is stable and shift invariant") {
  const Game g = gen_lbpot(4, 2, 1);
  const LogitChain hot(g, 700.0);
  for (StateIndex x = 0; x < g.size(); ++x) {
    for (int i = 0; i < 4; ++i) {
      const auto s = update_distribution(hot, x, i);
      CHECK(std::isfinite(s[0]));
      CHECK(s[0] + s[1] == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  const Game base = gen_random_potential(2, 3, 4);
  std::vector<std::vector<double>> shifted(2, std::vector<double>(base.size()));
  for (int i = 0; i < 2; ++i)
    for (StateIndex x = 0; x < base.size(); ++x) shifted[i][x] = base.utility(i, x) + 1e3 * (i + 1);
  const Game moved({3, 3}, shifted);
  const LogitChain a(base, 2.0), b(moved, 2.0);
  for (StateIndex x = 0; x < base.size(); ++x) {
    for (int i = 0; i < 2; ++i) {
      const auto sa = update_distribution(a, x, i), sb = update_distribution(b, x, i);
      for (std::size_t k = 0; k < sa.size(); ++k) CHECK(std::abs(sa[k] - sb[k]) <= 1e-12);
    }
  }
}

TEST_CASE("transition matrix examples") {
  const Game g = single_edge();
  const TransitionMatrix p = transition_matrix(LogitChain(g, std::log(3.0)));
  CHECK(p(2, 3) == doctest::Approx(3.0 / 8.0).epsilon(1e-14));
  CHECK(max_row_error(p) <= 1e-12);

  const Game zero({2, 2}, {std::vector<double>(4, 0.0), std::vector<double>(4, 0.0)});
  const TransitionMatrix q = transition_matrix(LogitChain(zero, 0.0));
  for (StateIndex x = 0; x < 4; ++x) {
    for (StateIndex y = 0; y < 4; ++y) {
      const int d = __builtin_popcountll(x ^ y);
      const double want = d == 0 ? 0.5 : d == 1 ? 0.25 : 0.0;
      CHECK(q(x, y) == doctest::Approx(want).epsilon(1e-15));
    }
  }
}

TEST_CASE("transition matrix support, ergodicity and the definition oracle") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Game g = gen_random_potential(3, seed % 2 ? 2 : 3, seed);
    for (double beta : {0.0, 1.0, 5.0}) {
      const TransitionMatrix p = transition_matrix(LogitChain(g, beta));
      const std::vector<int> radices(g.space().radices().begin(), g.space().radices().end());
      const auto ref = oracle::logit_matrix(
          radices, [&](int i, std::size_t x) { return g.utility(i, x); }, beta);
      const auto phi_ref = oracle::logit_matrix(
          radices, [&](int, std::size_t x) { return -(*g.potential())[x]; }, beta);
      CHECK(max_row_error(p) <= 1e-12);
      CHECK(is_ergodic(p));
      for (StateIndex x = 0; x < g.size(); ++x) {
        for (StateIndex y = 0; y < g.size(); ++y) {
          CHECK(std::abs(p(x, y) - ref[x][y]) <= 1e-12);
          CHECK(std::abs(p(x, y) - phi_ref[x][y]) <= 1e-12);
          CHECK((p(x, y) > 0.0) == (g.space().hamming(x, y) <= 1));
        }
      }
    }
  }
}

TEST_CASE("transition matrix budget") {
  const Game big(std::vector<int>(14, 2), [](int, StateIndex) { return 0.0; });
  CHECK_THROWS_AS(transition_matrix(LogitChain(big, 1.0)), BudgetError);
  CHECK_THROWS_AS(LogitChain(big, -1.0), ArgumentError);
  CHECK_THROWS_AS(LogitChain(big, NAN), ArgumentError);
}

TEST_CASE("step matches P empirically at beta = 0") {
  const Game g = gen_random_potential(2, 3, 11);
  const LogitChain chain(g, 0.0);
  const TransitionMatrix p = transition_matrix(chain);
  SplitMix64 rng(2024);
  constexpr int kDraws = 1'000'000;
  const StateIndex x = 4;
  std::vector<int> counts(g.size(), 0);
  for (int k = 0; k < kDraws; ++k) ++counts[step(chain, x, rng)];
  for (StateIndex y = 0; y < g.size(); ++y) {
    const double q = p(x, y);
    const double sd = std::sqrt(q * (1 - q) / kDraws);
    CHECK(std::abs(counts[y] / double(kDraws) - q) <= 3 * sd + 1e-12);
  }
}

TEST_CASE("step at high beta and determinism") {
  const Game g = gen_dominant(2, 2);
  const LogitChain chain(g, 50.0);
  SplitMix64 rng(7);
  int stay = 0;
  for (int k = 0; k < 100000; ++k) stay += step(chain, 0, rng) == 0;
  CHECK(stay >= 99000);

  const Game r = gen_random_potential(3, 3, 5);
  const LogitChain rc(r, 1.0);
  SplitMix64 a(99), b(99);
  Profile xa{0, 1, 2}, xb{0, 1, 2};
  for (int t = 0; t < 1000; ++t) {
    xa = step(rc, xa, a);
    xb = step(rc, xb, b);
    REQUIRE(xa == xb);
  }
}

TEST_CASE("rng substreams are order independent and documented") {
  CHECK(SplitMix64::kAlgorithm == "splitmix64");
  SplitMix64 s3 = SplitMix64::substream(42, 3);
  const auto first = s3.next();
  SplitMix64::substream(42, 0).next();
  CHECK(SplitMix64::substream(42, 3).next() == first);
  CHECK(SplitMix64::substream(42, 4).next() != first);
  SplitMix64 r(1);
  for (int k = 0; k < 1000; ++k) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(r.below(7) < 7);
  }
}
