#include <doctest.h>

#include <set>

#include "logitlab/error.hpp"
#include "logitlab/game.hpp"
#include "logitlab/generators.hpp"
#include "logitlab/profile.hpp"
#include "../support/oracles.hpp"

using namespace logitlab;

namespace {

Game matching_pennies() {
  // Player 0 wants to match, player 1 to mismatch.
  return Game({2, 2}, {{1, -1, -1, 1}, {-1, 1, 1, -1}});
}

Game single_edge() {
  return Game::from_coordination(SocialGraph(2, {{0, 1}}), {1, 1, 0, 0});
}

}  // namespace

TEST_CASE("profile index examples") {
  const std::vector<int> binary{2, 2, 2};
  CHECK(profile_index(std::vector<int>{0, 0, 0}, binary) == 0);
  CHECK(profile_index(std::vector<int>{1, 0, 1}, binary) == 5);
  CHECK(index_profile(5, std::vector<int>{3, 2}) == Profile{2, 1});
}

TEST_CASE("profile index agrees with enumeration and round-trips") {
  for (const std::vector<int>& radices :
       {std::vector<int>{2, 2, 2}, {3, 2}, {4, 1, 3}, {2, 3, 4, 2, 5}, {16, 16, 16}}) {
    const auto ps = oracle::all_profiles(radices);
    for (std::size_t x = 0; x < ps.size(); ++x) {
      REQUIRE(profile_index(ps[x], radices) == x);
      REQUIRE(index_profile(x, radices) == ps[x]);
    }
  }
}

TEST_CASE("profile index range errors") {
  const std::vector<int> radices{3, 2};
  CHECK_THROWS_AS(profile_index(std::vector<int>{3, 0}, radices), RangeError);
  CHECK_THROWS_AS(profile_index(std::vector<int>{0, -1}, radices), RangeError);
  CHECK_THROWS_AS(profile_index(std::vector<int>{0}, radices), RangeError);
  CHECK_THROWS_AS(index_profile(6, radices), RangeError);
}

TEST_CASE("profile space neighbours and budget") {
  const ProfileSpace space({3, 2});
  std::set<StateIndex> seen;
  space.for_each_neighbor(0, [&](StateIndex y, int, int) { seen.insert(y); });
  CHECK(seen == std::set<StateIndex>{1, 2, 3});
  CHECK(space.degree() == 3);
  CHECK(space.differing_player(0, 3) == 1);
  CHECK(space.differing_player(0, 4) == -1);
  CHECK(space.hamming(0, 5) == 2);
  CHECK_THROWS_AS(ProfileSpace(std::vector<int>(21, 2)), BudgetError);
  CHECK_THROWS_AS(ProfileSpace(std::vector<int>{}), RangeError);
  CHECK_THROWS_AS(ProfileSpace(std::vector<int>{2, 0}), RangeError);
}

TEST_CASE("social graph validation") {
  CHECK_THROWS_AS(SocialGraph(3, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(SocialGraph(3, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(SocialGraph(3, {{0, 3}}), GraphError);
  CHECK(SocialGraph::ring(5).is_ring());
  CHECK_FALSE(SocialGraph::path(5).is_ring());
  CHECK(SocialGraph::clique(4).is_clique());
  CHECK(SocialGraph::clique(4).edges().size() == 6);
  CHECK(SocialGraph::clique(3).is_ring());
}

TEST_CASE("verify_potential examples") {
  const Game g({2, 2}, {{1, 0, 0, 1}, {1, 0, 0, 1}});
  CHECK(verify_potential(g, PotentialTable{{-1, 0, 0, -1}}).ok);

  const PotentialTable zero{{0, 0, 0, 0}};
  const PotentialCheck bad = verify_potential(g, zero);
  CHECK_FALSE(bad.ok);
  CHECK(bad.max_violation == doctest::Approx(1.0));

  // No table works for matching pennies; try a few.
  for (const PotentialTable& t :
       {PotentialTable{{0, 0, 0, 0}}, PotentialTable{{-1, 1, 1, -1}},
        PotentialTable{{1, -1, -1, 1}}, PotentialTable{{0, 2, 0, 2}}}) {
    CHECK_FALSE(verify_potential(matching_pennies(), t).ok);
  }
  CHECK_THROWS_AS(verify_potential(g, PotentialTable{{0, 0}}), ShapeError);
}

TEST_CASE("extract_potential examples") {
  const Game zero({2, 3}, {std::vector<double>(6, 0.0), std::vector<double>(6, 0.0)});
  CHECK(extract_potential(zero).values == std::vector<double>(6, 0.0));

  const Game g({2, 2}, {{1, 0, 0, 1}, {1, 0, 0, 1}});
  const PotentialTable phi = extract_potential(g);
  CHECK(phi.values == std::vector<double>{0, 1, 1, 0});

  try {
    extract_potential(matching_pennies());
    FAIL("expected NotPotentialError");
  } catch (const NotPotentialError& e) {
    CHECK(e.violation() > 1e-9);
    CHECK(e.cycle().size() >= 3);
    CHECK(e.cycle().front() == e.cycle().back());
  }
}

TEST_CASE("extracted potential verifies on generated games and is shift invariant") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Game g = gen_random_potential(3, 3, seed);
    const Game generic(std::vector<int>{3, 3, 3}, [&] {
      std::vector<std::vector<double>> u(3, std::vector<double>(g.size()));
      for (int i = 0; i < 3; ++i)
        for (StateIndex x = 0; x < g.size(); ++x) u[i][x] = g.utility(i, x) + 7.5 * (i + 1);
      return u;
    }());
    const PotentialTable a = extract_potential(g);
    const PotentialTable b = extract_potential(generic);
    CHECK(verify_potential(g, a, 1e-12).ok);
    for (StateIndex x = 0; x < g.size(); ++x) {
      CHECK(a[x] - a[0] == doctest::Approx(b[x] - b[0]).epsilon(1e-12));
      CHECK(a[x] - a[0] == doctest::Approx((*g.potential())[x] - (*g.potential())[0]));
    }
  }
}

TEST_CASE("callback-backed game") {
  const Game g(std::vector<int>{2, 2}, [](int, StateIndex x) { return x == 3 ? 1.0 : 0.0; });
  CHECK_FALSE(g.has_dense_utilities());
  CHECK(g.utility(0, 3) == 1.0);
  CHECK(extract_potential(g).values == std::vector<double>{0, 0, 0, -1});
}

TEST_CASE("coordination game carries its potential") {
  const Game g = single_edge();
  CHECK(g.kind() == GameKind::coordination);
  CHECK(g.potential()->values == std::vector<double>{-1, 0, 0, -1});
  CHECK(verify_potential(g, *g.potential(), 1e-12).ok);
  CHECK(g.utility(0, 0) == 1.0);
  CHECK(g.utility(1, 1) == 0.0);
}
