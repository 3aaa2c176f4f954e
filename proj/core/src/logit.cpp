#include "logitlab/logit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "logitlab/error.hpp"

namespace logitlab {

LogitChain::LogitChain(const Game& game, double beta)
    : game_(&game), beta_(beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw ArgumentError("beta must be finite and non-negative, got " +
                        std::to_string(beta));
  }
}

std::vector<double> update_distribution(const LogitChain& chain, StateIndex x,
                                        int player) {
  const ProfileSpace& space = chain.space();
  if (player < 0 || player >= space.players()) {
    throw RangeError("player " + std::to_string(player) + " out of range");
  }
  const int m = space.radix(player);
  std::vector<double> sigma(static_cast<std::size_t>(m));
  double top = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < m; ++s) {
    sigma[s] = chain.beta() *
               chain.game().utility(player, space.with_strategy(x, player, s));
    top = std::max(top, sigma[s]);
  }
  double total = 0.0;
  for (double& v : sigma) {
    v = std::exp(v - top);
    total += v;
  }
  for (double& v : sigma) v /= total;
  return sigma;
}

std::vector<double> update_distribution(const LogitChain& chain,
                                        const Profile& x, int player) {
  return update_distribution(chain, chain.space().index(x), player);
}

TransitionMatrix transition_matrix(const LogitChain& chain) {
  const ProfileSpace& space = chain.space();
  require_budget(space.size(), dense_budget(), "transition matrix");
  TransitionMatrix p(space.size());
  const double weight = 1.0 / space.players();
  for (StateIndex x = 0; x < space.size(); ++x) {
    for (int i = 0; i < space.players(); ++i) {
      const std::vector<double> sigma = update_distribution(chain, x, i);
      for (int s = 0; s < space.radix(i); ++s) {
        p(x, space.with_strategy(x, i, s)) += weight * sigma[s];
      }
    }
  }
  return p;
}

double max_row_error(const TransitionMatrix& p) {
  double worst = 0.0;
  for (StateIndex x = 0; x < p.size(); ++x) {
    double sum = 0.0;
    for (double v : p.row(x)) sum += v;
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

namespace {

std::size_t reachable_count(const TransitionMatrix& p, bool transpose) {
  std::vector<bool> seen(p.size(), false);
  std::vector<StateIndex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const StateIndex x = stack.back();
    stack.pop_back();
    for (StateIndex y = 0; y < p.size(); ++y) {
      const double v = transpose ? p(y, x) : p(x, y);
      if (v > 0.0 && !seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count;
}

}  // namespace

bool is_ergodic(const TransitionMatrix& p) {
  if (p.size() == 0) return false;
  for (StateIndex x = 0; x < p.size(); ++x) {
    if (!(p(x, x) > 0.0)) return false;
  }
  return reachable_count(p, false) == p.size() &&
         reachable_count(p, true) == p.size();
}

int sample_strategy(std::span<const double> sigma, double u) {
  double acc = 0.0;
  for (std::size_t s = 0; s < sigma.size(); ++s) {
    acc += sigma[s];
    if (u < acc) return static_cast<int>(s);
  }
  // u within rounding of 1: take the last strategy with positive mass.
  for (std::size_t s = sigma.size(); s-- > 0;) {
    if (sigma[s] > 0.0) return static_cast<int>(s);
  }
  return 0;
}

StateIndex step(const LogitChain& chain, StateIndex x, SplitMix64& rng) {
  const ProfileSpace& space = chain.space();
  const int player = static_cast<int>(
      rng.below(static_cast<std::uint64_t>(space.players())));
  const std::vector<double> sigma = update_distribution(chain, x, player);
  return space.with_strategy(x, player, sample_strategy(sigma, rng.uniform()));
}

Profile step(const LogitChain& chain, const Profile& x, SplitMix64& rng) {
  return chain.space().profile(step(chain, chain.space().index(x), rng));
}

}  // namespace logitlab
