#include "logitlab/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "logitlab/error.hpp"

namespace logitlab {

namespace {

using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajorMatrix> as_eigen(const DenseMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  return Eigen::Map<const RowMajorMatrix>(m.data().data(), n, n);
}

void require_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw ShapeError(std::string(what) + ": length " + std::to_string(got) +
                     ", expected " + std::to_string(want));
  }
}

}  // namespace

SparseRows sparse_rows(const DenseMatrix& m) {
  SparseRows s;
  s.offsets.reserve(m.size() + 1);
  s.offsets.push_back(0);
  for (StateIndex x = 0; x < m.size(); ++x) {
    const auto row = m.row(x);
    for (StateIndex y = 0; y < m.size(); ++y) {
      if (row[y] != 0.0) {
        s.columns.push_back(y);
        s.values.push_back(row[y]);
      }
    }
    s.offsets.push_back(s.columns.size());
  }
  return s;
}

Distribution gibbs(const PotentialTable& phi, double beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw ArgumentError("beta must be finite and non-negative");
  }
  if (phi.size() == 0) throw ShapeError("empty potential table");
  const double low = *std::min_element(phi.values.begin(), phi.values.end());
  Distribution pi(phi.size());
  double z = 0.0;
  for (StateIndex x = 0; x < phi.size(); ++x) {
    pi[x] = std::exp(-beta * (phi[x] - low));
    z += pi[x];
  }
  for (double& v : pi) v /= z;
  return pi;
}

double stationary_residual(const TransitionMatrix& p,
                           std::span<const double> pi) {
  require_length(pi.size(), p.size(), "stationary_residual");
  const Eigen::Map<const Eigen::RowVectorXd> row(
      pi.data(), static_cast<Eigen::Index>(pi.size()));
  return (row * as_eigen(p) - row).cwiseAbs().maxCoeff();
}

Distribution stationary(const TransitionMatrix& p) {
  const std::size_t n = p.size();
  if (n == 0) throw ShapeError("empty transition matrix");
  if (!is_ergodic(p)) throw NumericalError("transition matrix is not ergodic");
  const auto size = static_cast<Eigen::Index>(n);
  // (P^T - I) pi = 0 with the last equation replaced by sum(pi) = 1.
  Eigen::MatrixXd a = as_eigen(p).transpose();
  a.diagonal().array() -= 1.0;
  a.row(size - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
  rhs(size - 1) = 1.0;
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  Eigen::VectorXd solution = lu.solve(rhs);
  solution += lu.solve(rhs - a * solution);  // one refinement step

  Distribution pi(n);
  double total = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    double v = solution(static_cast<Eigen::Index>(x));
    if (v < 0.0) {
      if (v < -1e-12) {
        throw NumericalError("stationary solve produced a negative entry " +
                             std::to_string(v));
      }
      v = 0.0;
    }
    pi[x] = v;
    total += v;
  }
  for (double& v : pi) v /= total;
  const double residual = stationary_residual(p, pi);
  if (!(residual <= 1e-10)) {
    throw NumericalError("stationary residual " + std::to_string(residual) +
                         " exceeds 1e-10");
  }
  return pi;
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
  require_length(q.size(), p.size(), "tv_distance");
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) sum += std::abs(p[k] - q[k]);
  return 0.5 * sum;
}

MixingResult exact_mixing_time(const TransitionMatrix& p,
                               std::span<const double> pi, double eps,
                               std::size_t cap) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ArgumentError("epsilon must lie in (0, 1)");
  }
  if (cap < 1) throw ArgumentError("cap must be at least 1");
  const std::size_t n = p.size();
  require_length(pi.size(), n, "exact_mixing_time");
  const SparseRows sparse = sparse_rows(p);

  // rows[x * n + y] = P^t(x, y)
  std::vector<double> rows(n * n, 0.0);
  std::vector<double> next(n * n, 0.0);
  for (std::size_t x = 0; x < n; ++x) rows[x * n + x] = 1.0;

  const auto distance = [&](const std::vector<double>& r) {
    double worst = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      worst = std::max(worst, tv_distance({r.data() + x * n, n}, pi));
    }
    return worst;
  };

  MixingResult result;
  for (std::size_t t = 0;; ++t) {
    const double d = distance(rows);
    result.distances.push_back(d);
    if (d <= eps) {
      result.t_mix = t;
      return result;
    }
    if (t == cap) {
      throw TruncationError("mixing time exceeds cap " + std::to_string(cap) +
                                " (d(cap) = " + std::to_string(d) + ")",
                            cap, d);
    }
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t x = 0; x < n; ++x) {
      const double* src = rows.data() + x * n;
      double* dst = next.data() + x * n;
      for (std::size_t z = 0; z < n; ++z) {
        const double mass = src[z];
        if (mass == 0.0) continue;
        for (std::size_t k = sparse.offsets[z]; k < sparse.offsets[z + 1]; ++k) {
          dst[sparse.columns[k]] += mass * sparse.values[k];
        }
      }
    }
    rows.swap(next);
  }
}

MixingResult mixing_time_by_squaring(const TransitionMatrix& p,
                                     std::span<const double> pi, double eps,
                                     std::size_t cap) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ArgumentError("epsilon must lie in (0, 1)");
  }
  if (cap < 1) throw ArgumentError("cap must be at least 1");
  const std::size_t n = p.size();
  require_length(pi.size(), n, "mixing_time_by_squaring");
  const auto size = static_cast<Eigen::Index>(n);
  const Eigen::Map<const Eigen::RowVectorXd> target(pi.data(), size);
  const auto distance = [&](const Eigen::MatrixXd& m) {
    double worst = 0.0;
    for (Eigen::Index x = 0; x < size; ++x) {
      worst = std::max(worst, 0.5 * (m.row(x) - target).cwiseAbs().sum());
    }
    return worst;
  };

  Eigen::MatrixXd current = Eigen::MatrixXd::Identity(size, size);
  const double d0 = distance(current);
  if (d0 <= eps) return {0, {d0}};

  // powers[k] = P^(2^k), collected until 2^k >= cap or d(2^k) <= eps.
  std::vector<Eigen::MatrixXd> powers{as_eigen(p)};
  std::size_t span = 1;
  while (distance(powers.back()) > eps) {
    if (span >= cap) {
      const double d = distance(powers.back());
      throw TruncationError("mixing time exceeds cap " + std::to_string(cap), cap, d);
    }
    powers.push_back(powers.back() * powers.back());
    span *= 2;
  }
  // Largest t with d(t) > eps, built greedily from the high bits down.
  std::size_t t = 0;
  for (std::size_t k = powers.size(); k-- > 0;) {
    Eigen::MatrixXd next = current * powers[k];
    if (distance(next) > eps) {
      current = std::move(next);
      t += std::size_t{1} << k;
    }
  }
  if (t + 1 > cap) {
    throw TruncationError("mixing time exceeds cap " + std::to_string(cap), cap,
                          distance(current));
  }
  return {t + 1, {distance(current * powers[0])}};
}

ReversibilityReport reversibility_check(const TransitionMatrix& p,
                                        std::span<const double> pi) {
  const std::size_t n = p.size();
  require_length(pi.size(), n, "reversibility_check");
  ReversibilityReport report{0.0, {0, 0}, DenseMatrix(n)};
  for (StateIndex x = 0; x < n; ++x) {
    for (StateIndex y = 0; y < n; ++y) {
      report.edge_measure(x, y) = pi[x] * p(x, y);
    }
  }
  for (StateIndex x = 0; x < n; ++x) {
    for (StateIndex y = x + 1; y < n; ++y) {
      const double v =
          std::abs(report.edge_measure(x, y) - report.edge_measure(y, x));
      if (v > report.max_violation) {
        report.max_violation = v;
        report.witness = {x, y};
      }
    }
  }
  return report;
}

SpectrumReport spectrum(const TransitionMatrix& p, std::span<const double> pi) {
  const std::size_t n = p.size();
  require_length(pi.size(), n, "spectrum");
  const ReversibilityReport rev = reversibility_check(p, pi);
  if (rev.max_violation > kReversibilityTolerance) {
    throw NotReversibleError("chain is not reversible: detailed balance off by " +
                                 std::to_string(rev.max_violation),
                             rev.max_violation);
  }
  const auto size = static_cast<Eigen::Index>(n);
  Eigen::VectorXd root(size);
  for (Eigen::Index x = 0; x < size; ++x) {
    if (!(pi[x] > 0.0)) {
      throw NumericalError("stationary distribution has a zero entry");
    }
    root(x) = std::sqrt(pi[x]);
  }
  Eigen::MatrixXd a = root.asDiagonal() * as_eigen(p);
  a = a * root.cwiseInverse().asDiagonal();
  a = 0.5 * (a + a.transpose()).eval();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge");
  }
  SpectrumReport report;
  report.eigenvalues.assign(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + n);
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
            std::greater<>());
  if (n > 1) {
    report.lambda_star =
        std::max(std::abs(report.eigenvalues[1]), std::abs(report.eigenvalues.back()));
  }
  report.t_rel = 1.0 / (1.0 - report.lambda_star);
  return report;
}

}  // namespace logitlab
