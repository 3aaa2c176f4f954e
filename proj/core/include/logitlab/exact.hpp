#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "logitlab/game.hpp"
#include "logitlab/logit.hpp"

namespace logitlab {

/// Probability per state, indexed by state index.
using Distribution = std::vector<double>;

inline constexpr double kDefaultEpsilon = 0.25;
inline constexpr std::size_t kDefaultMixingCap = 1'000'000;

/// Non-zero entries of a dense matrix, row by row.
struct SparseRows {
  std::vector<std::size_t> offsets;  // size + 1 entries
  std::vector<StateIndex> columns;
  std::vector<double> values;

  std::size_t size() const { return offsets.empty() ? 0 : offsets.size() - 1; }
};

SparseRows sparse_rows(const DenseMatrix& m);

/// Gibbs measure pi(x) = exp(-beta Phi(x)) / Z, evaluated with Phi_min
/// subtracted.
Distribution gibbs(const PotentialTable& phi, double beta);

/// Solves pi P = pi, sum(pi) = 1 by a direct dense solve with the last
/// balance equation replaced by normalisation. Throws NumericalError when
/// P is not ergodic or the residual ||pi P - pi||_inf exceeds 1e-10.
Distribution stationary(const TransitionMatrix& p);

/// ||pi P - pi||_inf.
double stationary_residual(const TransitionMatrix& p, std::span<const double> pi);

/// Half the L1 distance. Throws ShapeError on a length mismatch.
double tv_distance(std::span<const double> p, std::span<const double> q);

struct MixingResult {
  std::size_t t_mix = 0;
  /// d(t) = max_x ||P^t(x, .) - pi||_TV for t = 0, ..., t_mix.
  std::vector<double> distances;
};

/// Evolves every row distribution P^t(x, .) one step at a time and returns
/// the first t with d(t) <= eps. Throws TruncationError (carrying d(cap))
/// when t reaches cap first, ArgumentError unless 0 < eps < 1.
MixingResult exact_mixing_time(const TransitionMatrix& p,
                               std::span<const double> pi,
                               double eps = kDefaultEpsilon,
                               std::size_t cap = kDefaultMixingCap);

/// Same t_mix as exact_mixing_time, found by binary search over the powers
/// P^(2^k). Costs O(|S|^3 log t_mix) instead of O(t_mix |S| nnz(P)), so it
/// suits small spaces with very slow mixing. `distances` holds d(t_mix)
/// only. Same errors as exact_mixing_time.
MixingResult mixing_time_by_squaring(const TransitionMatrix& p,
                                     std::span<const double> pi,
                                     double eps = kDefaultEpsilon,
                                     std::size_t cap = kDefaultMixingCap);

struct SpectrumReport {
  std::vector<double> eigenvalues;  // descending; eigenvalues[0] == 1
  double lambda_star = 0.0;         // max(|lambda_2|, |lambda_last|)
  double t_rel = 1.0;               // 1 / (1 - lambda_star)

  double lambda2() const { return eigenvalues.size() > 1 ? eigenvalues[1] : 0.0; }
  double lambda_min() const { return eigenvalues.back(); }
};

inline constexpr double kReversibilityTolerance = 1e-9;

/// Eigenvalues of the symmetrisation sqrt(pi(x)/pi(y)) P(x,y). Throws
/// NotReversibleError when detailed balance fails by more than 1e-9.
SpectrumReport spectrum(const TransitionMatrix& p, std::span<const double> pi);

struct ReversibilityReport {
  double max_violation = 0.0;
  std::pair<StateIndex, StateIndex> witness{0, 0};
  DenseMatrix edge_measure;  // Q(x, y) = pi(x) P(x, y)
};

/// max |pi(x)P(x,y) - pi(y)P(y,x)| over all pairs, plus Q.
ReversibilityReport reversibility_check(const TransitionMatrix& p,
                                        std::span<const double> pi);

}  // namespace logitlab
