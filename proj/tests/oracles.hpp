// Independent reference implementations used only by the tests. None of them
// calls into the simplex code; they are slow and exhaustive on purpose.
#ifndef L1LANDSCAPE_TESTS_ORACLES_HPP_
#define L1LANDSCAPE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;  // row-major

// Solves the square system M x = r by Gaussian elimination with partial
// pivoting. Empty result when M is (numerically) singular.
inline std::optional<Vec> solve_square(Mat m, Vec r) {
  const std::size_t n = r.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::abs(m[i][c]) > std::abs(m[p][c])) p = i;
    if (std::abs(m[p][c]) < 1e-10) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(r[p], r[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      const double f = m[i][c] / m[c][c];
      if (f == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
      r[i] -= f * r[c];
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = r[i] / m[i][i];
  return x;
}

// Row-reduces [A | b] and drops dependent rows. Returns false when the
// system is inconsistent.
inline bool reduce_rows(Mat& a, Vec& b, std::size_t cols) {
  Mat out_a;
  Vec out_b;
  Mat work = a;
  Vec rhs = b;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < work.size(); ++c) {
    std::size_t p = row;
    for (std::size_t i = row + 1; i < work.size(); ++i)
      if (std::abs(work[i][c]) > std::abs(work[p][c])) p = i;
    if (std::abs(work[p][c]) < 1e-10) continue;
    std::swap(work[p], work[row]);
    std::swap(rhs[p], rhs[row]);
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (i == row) continue;
      const double f = work[i][c] / work[row][c];
      for (std::size_t k = 0; k < cols; ++k) work[i][k] -= f * work[row][k];
      rhs[i] -= f * rhs[row];
    }
    ++row;
  }
  for (std::size_t i = row; i < work.size(); ++i)
    if (std::abs(rhs[i]) > 1e-9) return false;
  work.resize(row);
  rhs.resize(row);
  a = std::move(work);
  b = std::move(rhs);
  return true;
}

struct LpOutcome {
  bool feasible = false;
  double value = -std::numeric_limits<double>::infinity();
  Vec x;
};

// max c^T x s.t. A x = b, lo <= x <= hi, by enumerating every basic solution.
// Exponential; meant for k <= ~10 variables.
inline LpOutcome enumerate_lp(const Vec& lo, const Vec& hi, Mat a, Vec b, const Vec& c,
                              double tol = 1e-9) {
  const std::size_t k = lo.size();
  LpOutcome best;
  if (!reduce_rows(a, b, k)) return best;
  const std::size_t m = b.size();

  std::vector<int> basis_mask(k, 0);
  std::fill(basis_mask.end() - static_cast<std::ptrdiff_t>(m), basis_mask.end(), 1);
  do {
    std::vector<std::size_t> basic, nonbasic;
    for (std::size_t j = 0; j < k; ++j) (basis_mask[j] ? basic : nonbasic).push_back(j);
    Mat bm(m, Vec(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t t = 0; t < m; ++t) bm[i][t] = a[i][basic[t]];
    if (m > 0 && !solve_square(bm, Vec(m, 0.0)).has_value()) continue;

    const std::size_t nn = nonbasic.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << nn); ++bits) {
      Vec x(k, 0.0);
      for (std::size_t t = 0; t < nn; ++t) x[nonbasic[t]] = (bits >> t & 1) ? hi[nonbasic[t]] : lo[nonbasic[t]];
      Vec r = b;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j : nonbasic) r[i] -= a[i][j] * x[j];
      if (m > 0) {
        const auto xb = solve_square(bm, r);
        if (!xb) continue;
        for (std::size_t t = 0; t < m; ++t) x[basic[t]] = (*xb)[t];
      }
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = x[j] >= lo[j] - tol && x[j] <= hi[j] + tol;
      if (!ok) continue;
      double v = 0.0;
      for (std::size_t j = 0; j < k; ++j) v += c[j] * x[j];
      if (!best.feasible || v > best.value) {
        best.feasible = true;
        best.value = v;
        best.x = x;
      }
    }
  } while (std::next_permutation(basis_mask.begin(), basis_mask.end()));
  return best;
}

// Is g a convex combination of the columns of v? Basic feasible solutions of
// {lambda >= 0, sum lambda = 1, V lambda = g} have every nonbasic weight at 0.
inline bool in_convex_hull(const std::vector<Vec>& v, const Vec& g, double tol = 1e-7) {
  const std::size_t k = v.size(), n = g.size();
  Mat a(n + 1, Vec(k, 1.0));
  Vec b(n + 1, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = g[i];
    for (std::size_t t = 0; t < k; ++t) a[i][t] = v[t][i];
  }
  if (!reduce_rows(a, b, k)) return false;
  const std::size_t m = b.size();
  if (m > k) return false;
  std::vector<int> mask(k, 0);
  std::fill(mask.end() - static_cast<std::ptrdiff_t>(m), mask.end(), 1);
  do {
    std::vector<std::size_t> basic;
    for (std::size_t j = 0; j < k; ++j)
      if (mask[j]) basic.push_back(j);
    Mat bm(m, Vec(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t t = 0; t < m; ++t) bm[i][t] = a[i][basic[t]];
    const auto x = solve_square(bm, b);
    if (!x) continue;
    bool ok = true;
    for (double xi : *x) ok = ok && xi >= -tol;
    if (ok) return true;
  } while (std::next_permutation(mask.begin(), mask.end()));
  return false;
}

// --- the objective, written from scratch ------------------------------------

inline double residual(const Vec& u, const Vec& us, std::size_t i, std::size_t j) {
  return u[i] * u[j] - us[i] * us[j];
}

inline double f(const Vec& u, const Vec& us) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) s += std::abs(residual(u, us, i, j));
  return 0.5 * s;
}

// Entries of the symmetric sign matrix: fixed +-1, or free (box [-1,1]).
struct SignPattern {
  std::size_t n = 0;
  std::vector<std::vector<int>> s;  // -1, 0 (free), +1
};

inline SignPattern sign_pattern(const Vec& u, const Vec& us, double eps) {
  SignPattern p;
  p.n = u.size();
  p.s.assign(p.n, std::vector<int>(p.n, 0));
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = 0; j < p.n; ++j) {
      const double r = residual(u, us, i, j);
      p.s[i][j] = std::abs(r) <= eps ? 0 : (r > 0 ? 1 : -1);
    }
  return p;
}

// Every vertex of the subdifferential: free entries (upper triangle) take
// +-1, mirrored. Returns the list of Z u.
inline std::vector<Vec> subgradient_vertices(const Vec& u, const Vec& us, double eps = 1e-9) {
  const SignPattern p = sign_pattern(u, us, eps);
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = i; j < p.n; ++j)
      if (p.s[i][j] == 0) free.emplace_back(i, j);
  std::vector<Vec> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
    std::vector<std::vector<double>> z(p.n, Vec(p.n));
    for (std::size_t i = 0; i < p.n; ++i)
      for (std::size_t j = 0; j < p.n; ++j) z[i][j] = p.s[i][j];
    for (std::size_t t = 0; t < free.size(); ++t) {
      const double v = (bits >> t & 1) ? 1.0 : -1.0;
      z[free[t].first][free[t].second] = v;
      z[free[t].second][free[t].first] = v;
    }
    Vec g(p.n, 0.0);
    for (std::size_t i = 0; i < p.n; ++i)
      for (std::size_t j = 0; j < p.n; ++j) g[i] += z[i][j] * u[j];
    out.push_back(g);
  }
  return out;
}

// Support function of the subdifferential by exhaustive vertex enumeration.
inline double directional_derivative(const Vec& u, const Vec& us, const Vec& w,
                                     double eps = 1e-9) {
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec& g : subgradient_vertices(u, us, eps)) {
    double v = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) v += g[i] * w[i];
    best = std::max(best, v);
  }
  return best;
}

// Is 0 in the subdifferential? Vertex enumeration over the free entries with
// the constraint Z u = 0.
inline bool stationary_by_enumeration(const Vec& u, const Vec& us, double eps = 1e-9) {
  const SignPattern p = sign_pattern(u, us, eps);
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = i; j < p.n; ++j)
      if (p.s[i][j] == 0) free.emplace_back(i, j);
  Mat a(p.n, Vec(free.size(), 0.0));
  Vec b(p.n, 0.0);
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = 0; j < p.n; ++j) b[i] -= p.s[i][j] * u[j];
  for (std::size_t t = 0; t < free.size(); ++t) {
    const auto [i, j] = free[t];
    a[i][t] += u[j];
    if (i != j) a[j][t] += u[i];
  }
  const Vec lo(free.size(), -1.0), hi(free.size(), 1.0), c(free.size(), 0.0);
  return enumerate_lp(lo, hi, a, b, c, 1e-7).feasible;
}

// max w^T Q w over symmetric Q in the sign boxes with Q u = 0.
inline LpOutcome second_order_lp(const Vec& u, const Vec& us, const Vec& w, double eps = 1e-9) {
  const SignPattern p = sign_pattern(u, us, eps);
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = i; j < p.n; ++j)
      if (p.s[i][j] == 0) free.emplace_back(i, j);
  Mat a(p.n, Vec(free.size(), 0.0));
  Vec b(p.n, 0.0);
  double fixed_value = 0.0;
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = 0; j < p.n; ++j) {
      b[i] -= p.s[i][j] * u[j];
      fixed_value += p.s[i][j] * w[i] * w[j];
    }
  Vec c(free.size());
  for (std::size_t t = 0; t < free.size(); ++t) {
    const auto [i, j] = free[t];
    a[i][t] += u[j];
    if (i != j) a[j][t] += u[i];
    c[t] = i == j ? w[i] * w[i] : 2.0 * w[i] * w[j];
  }
  const Vec lo(free.size(), -1.0), hi(free.size(), 1.0);
  LpOutcome r = enumerate_lp(lo, hi, a, b, c, 1e-7);
  if (r.feasible) r.value += fixed_value;
  return r;
}

// Euclidean projection onto {|u_i| <= |u*_i|} intersect {sum sign(u*_i) u_i = 0}
// by Dykstra's alternating projections.
inline Vec dykstra_projection(const Vec& y, const Vec& us, int iters = 20000) {
  const std::size_t n = y.size();
  Vec s(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = us[i] > 0 ? 1.0 : (us[i] < 0 ? -1.0 : 0.0);
    ss += s[i] * s[i];
  }
  Vec x = y, p(n, 0.0), q(n, 0.0);
  for (int it = 0; it < iters; ++it) {
    Vec yb(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double v = x[i] + p[i];
      yb[i] = std::clamp(v, -std::abs(us[i]), std::abs(us[i]));
      p[i] = v - yb[i];
    }
    Vec z(n);
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      z[i] = yb[i] + q[i];
      dot += s[i] * z[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double xn = ss > 0 ? z[i] - dot / ss * s[i] : z[i];
      q[i] = z[i] - xn;
      x[i] = xn;
    }
  }
  return x;
}

}  // namespace oracle

#endif  // L1LANDSCAPE_TESTS_ORACLES_HPP_
