#include "logitlab/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logitlab/error.hpp"

namespace logitlab {

namespace {

// Label of U in one chain's residual region, laid out from 1 downward.
int residual_label(const std::vector<double>& sigma,
                   const std::vector<double>& common, double u) {
  double top = 1.0;
  int last = -1;
  for (std::size_t z = 0; z < sigma.size(); ++z) {
    const double r = sigma[z] - common[z];
    if (!(r > 0.0)) continue;
    last = static_cast<int>(z);
    top -= r;
    if (u >= top) return last;
  }
  return last;
}

}  // namespace

std::pair<StateIndex, StateIndex> coupled_step(const LogitChain& chain,
                                               StateIndex x, StateIndex y,
                                               int player, double u) {
  const ProfileSpace& space = chain.space();
  const std::vector<double> sx = update_distribution(chain, x, player);
  const std::vector<double> sy =
      x == y ? sx : update_distribution(chain, y, player);
  std::vector<double> common(sx.size());
  double acc = 0.0;
  int last_common = -1;
  for (std::size_t z = 0; z < sx.size(); ++z) {
    common[z] = std::min(sx[z], sy[z]);
    if (common[z] > 0.0) last_common = static_cast<int>(z);
    acc += common[z];
    if (u < acc) {
      const int s = static_cast<int>(z);
      return {space.with_strategy(x, player, s), space.with_strategy(y, player, s)};
    }
  }
  int a = residual_label(sx, common, u);
  int b = residual_label(sy, common, u);
  // Only reachable through rounding when the overlap is (numerically) 1.
  if (a < 0) a = last_common;
  if (b < 0) b = last_common;
  return {space.with_strategy(x, player, a), space.with_strategy(y, player, b)};
}

std::pair<StateIndex, StateIndex> coupled_step(const LogitChain& chain,
                                               StateIndex x, StateIndex y,
                                               SplitMix64& rng) {
  const int player = static_cast<int>(
      rng.below(static_cast<std::uint64_t>(chain.space().players())));
  return coupled_step(chain, x, y, player, rng.uniform());
}

void grand_step(const LogitChain& chain, std::vector<StateIndex>& states,
                SplitMix64& rng) {
  const ProfileSpace& space = chain.space();
  const int player =
      static_cast<int>(rng.below(static_cast<std::uint64_t>(space.players())));
  const double u = rng.uniform();
  for (StateIndex& x : states) {
    const std::vector<double> sigma = update_distribution(chain, x, player);
    x = space.with_strategy(x, player, sample_strategy(sigma, u));
  }
}

CouplingRun coupling_time(const LogitChain& chain, StateIndex x, StateIndex y,
                          std::size_t horizon, SplitMix64 rng) {
  CouplingRun run{x, y, horizon, std::nullopt, rng.state()};
  for (std::size_t t = 0;; ++t) {
    if (x == y) {
      run.tau = t;
      return run;
    }
    if (t == horizon) return run;
    std::tie(x, y) = coupled_step(chain, x, y, rng);
  }
}

std::vector<std::pair<StateIndex, StateIndex>> default_pairs(
    const ProfileSpace& space, std::size_t random_pairs, std::uint64_t seed) {
  std::vector<StateIndex> unanimous;
  for (int s = 0;; ++s) {
    bool ok = true;
    StateIndex x = 0;
    for (int i = 0; i < space.players() && ok; ++i) {
      if (s >= space.radix(i)) ok = false;
      else x += static_cast<StateIndex>(s) * space.stride(i);
    }
    if (!ok) break;
    unanimous.push_back(x);
  }
  std::vector<std::pair<StateIndex, StateIndex>> pairs;
  for (std::size_t a = 0; a < unanimous.size(); ++a) {
    for (std::size_t b = a + 1; b < unanimous.size(); ++b) {
      pairs.emplace_back(unanimous[a], unanimous[b]);
    }
  }
  if (space.size() > 1) {
    SplitMix64 rng(seed);
    for (std::size_t k = 0; k < random_pairs; ++k) {
      const StateIndex x = rng.below(space.size());
      StateIndex y = rng.below(space.size() - 1);
      if (y >= x) ++y;
      pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

std::pair<double, double> wilson_interval(std::size_t successes,
                                          std::size_t trials) {
  if (trials == 0) throw ArgumentError("wilson interval needs trials >= 1");
  constexpr double z = 1.96;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double scale = 1.0 + z * z / n;
  const double centre = (p + z * z / (2.0 * n)) / scale;
  const double spread =
      z / scale * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n));
  return {std::max(0.0, centre - spread), std::min(1.0, centre + spread)};
}

TvEstimate coupling_tv_bound(
    const LogitChain& chain, std::size_t t, std::size_t trials,
    const std::vector<std::pair<StateIndex, StateIndex>>& pairs,
    std::uint64_t seed) {
  if (trials == 0) throw ArgumentError("coupling_tv_bound needs trials >= 1");
  if (pairs.empty()) throw ArgumentError("coupling_tv_bound needs at least one pair");
  TvEstimate out;
  out.runs.reserve(pairs.size() * trials);
  std::size_t worst_count = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [x, y] = pairs[k];
    if (x >= chain.space().size() || y >= chain.space().size()) {
      throw RangeError("pair state out of range");
    }
    std::size_t apart = 0;
    for (std::size_t j = 0; j < trials; ++j) {
      const CouplingRun run = coupling_time(
          chain, x, y, t, SplitMix64::substream(seed, k * trials + j));
      if (!run.tau) ++apart;
      out.runs.push_back(run);
    }
    out.per_pair.push_back(static_cast<double>(apart) / static_cast<double>(trials));
    if (k == 0 || apart > worst_count) {
      worst_count = apart;
      out.worst = pairs[k];
    }
  }
  out.estimate = static_cast<double>(worst_count) / static_cast<double>(trials);
  out.upper = wilson_interval(worst_count, trials).second;
  out.half_width = out.upper - out.estimate;
  return out;
}

HittingEstimate estimate_hitting(const LogitChain& chain, StateIndex start,
                                 const std::function<bool(StateIndex)>& target,
                                 std::size_t trials, std::size_t horizon,
                                 std::uint64_t seed) {
  if (trials == 0) throw ArgumentError("estimate_hitting needs trials >= 1");
  if (start >= chain.space().size()) throw RangeError("start state out of range");
  HittingEstimate out;
  std::vector<double> times;
  for (std::size_t k = 0; k < trials; ++k) {
    SplitMix64 rng = SplitMix64::substream(seed, k);
    HittingTrial trial{std::nullopt, rng.state()};
    StateIndex x = start;
    for (std::size_t t = 0;; ++t) {
      if (target(x)) {
        trial.time = t;
        break;
      }
      if (t == horizon) break;
      x = step(chain, x, rng);
    }
    if (trial.time) {
      times.push_back(static_cast<double>(*trial.time));
    } else {
      ++out.censored;
    }
    out.trials.push_back(trial);
  }
  if (!times.empty()) {
    double sum = 0.0;
    for (double v : times) sum += v;
    out.mean = sum / static_cast<double>(times.size());
  }
  // Censored runs sort after every finite time.
  std::sort(times.begin(), times.end());
  const auto at = [&](std::size_t k) -> std::optional<double> {
    if (k < times.size()) return times[k];
    return std::nullopt;
  };
  if (trials % 2 == 1) {
    out.median = at(trials / 2);
  } else {
    const auto lo = at(trials / 2 - 1);
    const auto hi = at(trials / 2);
    if (lo && hi) out.median = (*lo + *hi) / 2.0;
  }
  return out;
}

}  // namespace logitlab
