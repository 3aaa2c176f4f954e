#pragma once

#include <span>
#include <vector>

#include "logitlab/game.hpp"
#include "logitlab/rng.hpp"

namespace logitlab {

/// The logit dynamics of a game at inverse noise beta. Holds a reference:
/// the game must outlive the chain.
class LogitChain {
 public:
  /// Throws ArgumentError unless beta is finite and non-negative.
  LogitChain(const Game& game, double beta);

  const Game& game() const { return *game_; }
  const ProfileSpace& space() const { return game_->space(); }
  double beta() const { return beta_; }

 private:
  const Game* game_;
  double beta_;
};

/// sigma_i(. | x): softmax of beta * u_i(s, x_-i) over s in S_i, computed
/// with the maximum exponent subtracted. Entries that underflow are 0 and
/// the rest are renormalised.
std::vector<double> update_distribution(const LogitChain& chain, StateIndex x,
                                        int player);
std::vector<double> update_distribution(const LogitChain& chain,
                                        const Profile& x, int player);

/// Dense row-major square matrix over the state space.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t size = 0)
      : size_(size), data_(size * size, 0.0) {}

  std::size_t size() const { return size_; }
  double operator()(StateIndex x, StateIndex y) const {
    return data_[x * size_ + y];
  }
  double& operator()(StateIndex x, StateIndex y) { return data_[x * size_ + y]; }
  std::span<const double> row(StateIndex x) const {
    return {data_.data() + x * size_, size_};
  }
  std::span<const double> data() const { return data_; }

 private:
  std::size_t size_;
  std::vector<double> data_;
};

/// Row-stochastic transition matrix P.
using TransitionMatrix = DenseMatrix;

/// P(x, y) = sigma_i(y_i | x) / n for y differing from x only at player i;
/// P(x, x) = sum_i sigma_i(x_i | x) / n. Throws BudgetError when |S|
/// exceeds dense_budget().
TransitionMatrix transition_matrix(const LogitChain& chain);

/// Maximum |row sum - 1| over all rows.
double max_row_error(const TransitionMatrix& p);

/// True when the support graph of P is strongly connected and every
/// diagonal entry is positive (irreducible and aperiodic).
bool is_ergodic(const TransitionMatrix& p);

/// Samples y ~ sigma from the inverse CDF at u in [0, 1), strategy order.
int sample_strategy(std::span<const double> sigma, double u);

/// One step: a player chosen uniformly, then a strategy from sigma_i(. | x).
StateIndex step(const LogitChain& chain, StateIndex x, SplitMix64& rng);
Profile step(const LogitChain& chain, const Profile& x, SplitMix64& rng);

}  // namespace logitlab
