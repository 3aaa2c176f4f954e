// Independent reference implementations used to cross-check the library.
// They favour obviousness over speed and share no code with core/src.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline std::vector<std::vector<int>> all_profiles(const std::vector<int>& radices) {
  // Build big-endian then reverse each so player 0 varies fastest.
  std::vector<std::vector<int>> acc{{}};
  for (auto it = radices.rbegin(); it != radices.rend(); ++it) {
    std::vector<std::vector<int>> next;
    for (const auto& p : acc) {
      for (int s = 0; s < *it; ++s) {
        auto q = p;
        q.push_back(s);
        next.push_back(q);
      }
    }
    acc = std::move(next);
  }
  for (auto& p : acc) std::reverse(p.begin(), p.end());
  // acc is now ordered with the last player slowest.
  return acc;
}

inline int hamming(const std::vector<int>& a, const std::vector<int>& b) {
  int d = 0;
  for (std::size_t k = 0; k < a.size(); ++k) d += a[k] != b[k];
  return d;
}

/// Logit transition matrix straight from the definition.
inline Matrix logit_matrix(const std::vector<int>& radices,
                           const std::function<double(int, std::size_t)>& u,
                           double beta) {
  const auto ps = all_profiles(radices);
  const std::size_t size = ps.size();
  const int n = static_cast<int>(radices.size());
  auto find = [&](const std::vector<int>& p) {
    return static_cast<std::size_t>(std::find(ps.begin(), ps.end(), p) - ps.begin());
  };
  Matrix p(size, std::vector<double>(size, 0.0));
  for (std::size_t x = 0; x < size; ++x) {
    for (int i = 0; i < n; ++i) {
      std::vector<double> w;
      std::vector<std::size_t> to;
      for (int s = 0; s < radices[i]; ++s) {
        auto q = ps[x];
        q[i] = s;
        to.push_back(find(q));
        w.push_back(beta * u(i, to.back()));
      }
      const double top = *std::max_element(w.begin(), w.end());
      double z = 0.0;
      for (double& v : w) z += (v = std::exp(v - top));
      for (std::size_t k = 0; k < w.size(); ++k) p[x][to[k]] += w[k] / z / n;
    }
  }
  return p;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// First t with max_x TV(P^t(x,.), pi) <= eps, by explicit matrix powers.
inline std::size_t matrix_power_tmix(const Matrix& p, const std::vector<double>& pi,
                                     double eps, std::size_t cap = 100000) {
  const std::size_t n = p.size();
  Matrix m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  for (std::size_t t = 0; t <= cap; ++t) {
    double worst = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      double s = 0.0;
      for (std::size_t y = 0; y < n; ++y) s += std::abs(m[x][y] - pi[y]);
      worst = std::max(worst, s / 2.0);
    }
    if (worst <= eps) return t;
    m = multiply(m, p);
  }
  return cap + 1;
}

/// Solves a x = b by Gaussian elimination with partial pivoting.
inline std::vector<double> solve(Matrix a, std::vector<double> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

/// Expected hitting time of `target` from every state (0 on the target),
/// via the fundamental matrix of the chain killed on the target.
inline std::vector<double> mean_hitting(const Matrix& p, const std::vector<bool>& target) {
  std::vector<std::size_t> free;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (!target[x]) free.push_back(x);
  Matrix a(free.size(), std::vector<double>(free.size(), 0.0));
  for (std::size_t r = 0; r < free.size(); ++r)
    for (std::size_t c = 0; c < free.size(); ++c)
      a[r][c] = (r == c ? 1.0 : 0.0) - p[free[r]][free[c]];
  const auto h = solve(a, std::vector<double>(free.size(), 1.0));
  std::vector<double> out(p.size(), 0.0);
  for (std::size_t r = 0; r < free.size(); ++r) out[free[r]] = h[r];
  return out;
}

/// zeta by enumerating simple Hamming paths (branch and bound on the peak).
inline double brute_zeta(const std::vector<double>& phi, const std::vector<int>& radices) {
  const auto ps = all_profiles(radices);
  const std::size_t n = ps.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (hamming(ps[a], ps[b]) == 1) adj[a].push_back(b);

  double zeta = 0.0;
  std::vector<bool> on_path(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || phi[x] < phi[y]) continue;
      double best = std::numeric_limits<double>::infinity();
      std::function<void(std::size_t, double)> dfs = [&](std::size_t v, double peak) {
        if (peak >= best) return;
        if (v == y) {
          best = peak;
          return;
        }
        for (std::size_t w : adj[v]) {
          if (on_path[w]) continue;
          on_path[w] = true;
          dfs(w, std::max(peak, phi[w]));
          on_path[w] = false;
        }
      };
      on_path[x] = true;
      dfs(x, phi[x]);
      on_path[x] = false;
      zeta = std::max(zeta, best - phi[x]);
    }
  }
  return zeta;
}

/// Cutwidth over all n! orderings.
inline int brute_cutwidth(int vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> order(static_cast<std::size_t>(vertices));
  std::iota(order.begin(), order.end(), 0);
  int best = std::numeric_limits<int>::max();
  do {
    int worst = 0;
    for (int k = 0; k + 1 < vertices; ++k) {
      std::vector<bool> prefix(static_cast<std::size_t>(vertices), false);
      for (int j = 0; j <= k; ++j) prefix[order[j]] = true;
      int cut = 0;
      for (auto [a, b] : edges) cut += prefix[a] != prefix[b];
      worst = std::max(worst, cut);
    }
    best = std::min(best, worst);
  } while (std::next_permutation(order.begin(), order.end()));
  return vertices == 0 ? 0 : best;
}

}  // namespace oracle
