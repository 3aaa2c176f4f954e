#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "logitlab/logit.hpp"
#include "logitlab/rng.hpp"

namespace logitlab {

inline constexpr std::size_t kDefaultHorizon = 1'000'000;

/// One step of the interval coupling. A shared player i and U in [0, 1)
/// are drawn. The common part [0, l_i) holds, in strategy order, a segment
/// of length min(sigma_i(z|x), sigma_i(z|y)) for each z; each chain's
/// residual mass is laid out from 1 downward in strategy order. Each chain
/// moves to the label of its interval containing U.
std::pair<StateIndex, StateIndex> coupled_step(const LogitChain& chain,
                                               StateIndex x, StateIndex y,
                                               SplitMix64& rng);

/// Same as coupled_step with the player and U supplied by the caller.
std::pair<StateIndex, StateIndex> coupled_step(const LogitChain& chain,
                                               StateIndex x, StateIndex y,
                                               int player, double u);

/// Grand coupling: one shared (i, U) moves every state by the inverse CDF
/// of its own update distribution.
void grand_step(const LogitChain& chain, std::vector<StateIndex>& states,
                SplitMix64& rng);

struct CouplingRun {
  StateIndex x = 0;
  StateIndex y = 0;
  std::size_t horizon = 0;
  std::optional<std::size_t> tau;  // empty when censored at the horizon
  std::uint64_t seed = 0;          // initial state of the trial's generator
};

/// Runs the interval coupling from (x, y) until the copies meet or the
/// horizon passes.
CouplingRun coupling_time(const LogitChain& chain, StateIndex x, StateIndex y,
                          std::size_t horizon, SplitMix64 rng);

/// Pairs of distinct unanimity profiles plus `random_pairs` uniformly drawn
/// pairs x != y from `seed`.
std::vector<std::pair<StateIndex, StateIndex>> default_pairs(
    const ProfileSpace& space, std::size_t random_pairs, std::uint64_t seed);

struct TvEstimate {
  double estimate = 0.0;    // worst-pair fraction of runs with tau > t
  double half_width = 0.0;  // Wilson 95% upper limit minus the estimate
  double upper = 0.0;       // Wilson 95% upper limit
  std::pair<StateIndex, StateIndex> worst{0, 0};
  std::vector<double> per_pair;
  std::vector<CouplingRun> runs;  // pair-major, `trials` per pair
};

/// Estimates max over `pairs` of P[tau_couple > t] with `trials` runs per
/// pair. Trial j of pair k uses substream k * trials + j of `seed`.
/// Throws ArgumentError when trials == 0 or pairs is empty.
TvEstimate coupling_tv_bound(const LogitChain& chain, std::size_t t,
                             std::size_t trials,
                             const std::vector<std::pair<StateIndex, StateIndex>>& pairs,
                             std::uint64_t seed);

/// Wilson score interval at z = 1.96 for `successes` out of `trials`.
std::pair<double, double> wilson_interval(std::size_t successes,
                                          std::size_t trials);

struct HittingTrial {
  std::optional<std::size_t> time;  // empty when censored
  std::uint64_t seed = 0;
};

struct HittingEstimate {
  std::vector<HittingTrial> trials;
  std::size_t censored = 0;
  std::optional<double> mean;    // over uncensored trials
  std::optional<double> median;  // over all trials, censored counting as +inf
};

/// Trial k runs step() from `start` with substream k of `seed` until
/// `target` holds or `horizon` steps pass. Throws ArgumentError when
/// trials == 0.
HittingEstimate estimate_hitting(const LogitChain& chain, StateIndex start,
                                 const std::function<bool(StateIndex)>& target,
                                 std::size_t trials, std::size_t horizon,
                                 std::uint64_t seed);

}  // namespace logitlab
