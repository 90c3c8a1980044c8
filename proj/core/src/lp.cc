// Copyright 2026 The l1landscape Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "l1landscape/lp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace l1landscape::lp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTol = 1e-11;

// Dense tableau for  A' y + I a = b',  0 <= y <= r,  a >= 0,  b' >= 0.
// Columns [0, k) are structural, [k, k + m) artificial. The tableau holds
// B^{-1} [A' I]; its artificial block is therefore B^{-1} itself.
class Tableau {
 public:
  Tableau(const Matrix& a, const Vector& rhs, const Vector& range)
      : m_(a.rows()), k_(a.cols()), cols_(k_ + m_), t_(m_, cols_), rhs_(rhs), beta_(rhs),
        basis_(m_), upper_(cols_, kInf), at_upper_(cols_, false) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) t_(i, j) = a(i, j);
      t_(i, k_ + i) = 1.0;
      basis_[i] = k_ + i;
    }
    for (std::size_t j = 0; j < k_; ++j) upper_[j] = range[j];
    orig_ = t_;
  }

  // Maximizes cost^T (y, a). Returns false if the pivot budget runs out or
  // the problem looks unbounded (impossible with finite boxes, so numerical).
  bool optimize(const Vector& cost, std::size_t& pivots, std::size_t max_pivots) {
    const double dual_tol = 1e-11 * std::max(1.0, norm_inf(cost));
    Vector reduced(cols_);
    std::vector<char> is_basic(cols_, 0);
    while (true) {
      std::fill(is_basic.begin(), is_basic.end(), 0);
      for (std::size_t b : basis_) is_basic[b] = 1;
      for (std::size_t j = 0; j < cols_; ++j) {
        double d = cost[j];
        for (std::size_t i = 0; i < m_; ++i) d -= cost[basis_[i]] * t_(i, j);
        reduced[j] = d;
      }

      // Bland: lowest-index improving column.
      std::size_t entering = cols_;
      double dir = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (is_basic[j] || upper_[j] <= 0.0) continue;
        if (!at_upper_[j] && reduced[j] > dual_tol) {
          entering = j;
          dir = 1.0;
          break;
        }
        if (at_upper_[j] && reduced[j] < -dual_tol) {
          entering = j;
          dir = -1.0;
          break;
        }
      }
      if (entering == cols_) return true;
      if (pivots >= max_pivots) return false;
      ++pivots;

      // Ratio test; ties go to the lowest basic variable index.
      double theta = upper_[entering];
      std::size_t leave_row = m_;
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = t_(i, entering) * dir;
        double limit = kInf;
        if (a > kPivotTol) {
          limit = std::max(0.0, beta_[i]) / a;
        } else if (a < -kPivotTol && upper_[basis_[i]] < kInf) {
          limit = std::max(0.0, upper_[basis_[i]] - beta_[i]) / (-a);
        }
        if (limit == kInf) continue;
        const double slack = 1e-12 * std::max(1.0, theta == kInf ? 1.0 : std::abs(theta));
        if (limit < theta - slack) {
          theta = limit;
          leave_row = i;
        } else if (leave_row != m_ && limit <= theta + slack &&
                   basis_[i] < basis_[leave_row]) {
          leave_row = i;
        }
      }
      if (theta == kInf) return false;

      for (std::size_t i = 0; i < m_; ++i) beta_[i] -= t_(i, entering) * dir * theta;

      if (leave_row == m_) {
        // Bound flip, no basis change.
        at_upper_[entering] = !at_upper_[entering];
        continue;
      }

      const std::size_t leaving = basis_[leave_row];
      const double a = t_(leave_row, entering) * dir;
      at_upper_[leaving] = a < 0.0;
      const double entering_value = dir > 0.0 ? theta : upper_[entering] - theta;
      pivot(leave_row, entering);
      basis_[leave_row] = entering;
      at_upper_[entering] = false;
      beta_[leave_row] = entering_value;
    }
  }

  // Recomputes basic values from the nonbasic ones: x_B = B^{-1}(b' - N x_N).
  void refresh_basic_values() {
    std::vector<char> is_basic(cols_, 0);
    for (std::size_t b : basis_) is_basic[b] = 1;
    Vector resid = rhs_;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (is_basic[j] || !at_upper_[j]) continue;
      for (std::size_t i = 0; i < m_; ++i) resid[i] -= orig_(i, j) * upper_[j];
    }
    for (std::size_t i = 0; i < m_; ++i) {
      double v = 0.0;
      for (std::size_t r = 0; r < m_; ++r) v += t_(i, k_ + r) * resid[r];
      beta_[i] = v;
    }
  }

  // Artificial variables are pinned to zero after phase one.
  void close_artificials() {
    for (std::size_t j = k_; j < cols_; ++j) {
      upper_[j] = 0.0;
      at_upper_[j] = false;
    }
  }

  double artificial_sum() const {
    double s = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= k_) s += std::max(0.0, beta_[i]);
    }
    return s;
  }

  Vector structural_values() const {
    Vector y(k_, 0.0);
    for (std::size_t j = 0; j < k_; ++j) {
      if (at_upper_[j]) y[j] = upper_[j];
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < k_) y[basis_[i]] = beta_[i];
    }
    return y;
  }

  std::size_t columns() const { return cols_; }
  std::size_t structural() const { return k_; }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const double inv = 1.0 / t_(row, col);
    for (std::size_t j = 0; j < cols_; ++j) t_(row, j) *= inv;
    t_(row, col) = 1.0;
    const auto pivot_row = t_.row(row);
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row) continue;
      const double factor = t_(i, col);
      if (factor == 0.0) continue;
      auto target = t_.row(i);
      for (std::size_t j = 0; j < cols_; ++j) target[j] -= factor * pivot_row[j];
      target[col] = 0.0;
    }
  }

  std::size_t m_;
  std::size_t k_;
  std::size_t cols_;
  Matrix t_;
  Matrix orig_;
  Vector rhs_;
  Vector beta_;
  std::vector<std::size_t> basis_;
  Vector upper_;
  std::vector<char> at_upper_;
};

}  // namespace

void BoxEqLP::validate() const {
  const std::size_t k = lower.size();
  if (upper.size() != k || objective.size() != k) {
    throw std::invalid_argument("BoxEqLP: bounds/objective size mismatch");
  }
  if (eq_matrix.rows() != eq_rhs.size() || (eq_matrix.rows() > 0 && eq_matrix.cols() != k)) {
    throw std::invalid_argument("BoxEqLP: equality block shape mismatch");
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (!std::isfinite(lower[j]) || !std::isfinite(upper[j]) || !std::isfinite(objective[j])) {
      throw std::invalid_argument("BoxEqLP: non-finite bound or cost");
    }
    if (lower[j] > upper[j]) throw std::invalid_argument("BoxEqLP: lower > upper");
  }
  for (double v : eq_rhs) {
    if (!std::isfinite(v)) throw std::invalid_argument("BoxEqLP: non-finite rhs");
  }
  for (std::size_t i = 0; i < eq_matrix.rows(); ++i) {
    for (double v : eq_matrix.row(i)) {
      if (!std::isfinite(v)) throw std::invalid_argument("BoxEqLP: non-finite matrix entry");
    }
  }
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kOptimal: return "OPTIMAL";
    case Status::kInfeasible: return "INFEASIBLE";
    case Status::kNumericalFailure: return "NUMERICAL_FAILURE";
  }
  return "UNKNOWN";
}

LPResult solve(const BoxEqLP& lp, double eps_lp) {
  lp.validate();
  if (!(eps_lp > 0.0)) throw std::invalid_argument("lp::solve: eps_lp must be > 0");
  const std::size_t k = lp.num_vars();
  const std::size_t m = lp.num_rows();

  // Shift to y = x - lower in [0, range] and flip rows so that b' >= 0.
  Vector range(k);
  for (std::size_t j = 0; j < k; ++j) range[j] = lp.upper[j] - lp.lower[j];
  Matrix a(m, k);
  Vector rhs(m);
  double data_scale = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    double bi = lp.eq_rhs[i];
    for (std::size_t j = 0; j < k; ++j) bi -= lp.eq_matrix(i, j) * lp.lower[j];
    const double flip = bi < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < k; ++j) a(i, j) = flip * lp.eq_matrix(i, j);
    rhs[i] = flip * bi;
    data_scale = std::max(data_scale, std::abs(bi));
  }

  Tableau tab(a, rhs, range);
  const std::size_t total = k + m;
  const std::size_t max_pivots = 10 * total * total + 10;
  LPResult result;

  Vector phase1(total, 0.0);
  for (std::size_t j = k; j < total; ++j) phase1[j] = -1.0;
  if (!tab.optimize(phase1, result.pivots, max_pivots)) {
    result.status = Status::kNumericalFailure;
    return result;
  }
  tab.refresh_basic_values();
  if (tab.artificial_sum() > eps_lp * data_scale) {
    result.status = Status::kInfeasible;
    return result;
  }

  tab.close_artificials();
  Vector phase2(total, 0.0);
  for (std::size_t j = 0; j < k; ++j) phase2[j] = lp.objective[j];
  if (!tab.optimize(phase2, result.pivots, max_pivots)) {
    result.status = Status::kNumericalFailure;
    return result;
  }
  tab.refresh_basic_values();

  const Vector y = tab.structural_values();
  result.solution.resize(k);
  double bound_violation = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    const double x = lp.lower[j] + y[j];
    bound_violation = std::max({bound_violation, lp.lower[j] - x, x - lp.upper[j]});
    result.solution[j] = std::clamp(x, lp.lower[j], lp.upper[j]);
  }
  result.value = dot(lp.objective, result.solution);
  double x_scale = 1.0;
  for (double v : result.solution) x_scale = std::max(x_scale, std::abs(v));
  for (std::size_t i = 0; i < m; ++i) {
    double r = -lp.eq_rhs[i];
    double row_scale = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      r += lp.eq_matrix(i, j) * result.solution[j];
      row_scale = std::max(row_scale, std::abs(lp.eq_matrix(i, j)));
    }
    result.residual_norm = std::max(result.residual_norm, std::abs(r));
    data_scale = std::max(data_scale, row_scale * x_scale);
  }
  const double tol = eps_lp * data_scale;
  if (result.residual_norm > tol || bound_violation > tol) {
    result.status = Status::kNumericalFailure;
    return result;
  }
  result.status = Status::kOptimal;
  return result;
}

MinNormResult feasibility_min_infinity_norm(std::span<const double> lower,
                                            std::span<const double> upper,
                                            const Matrix& eq_matrix, double eps_lp) {
  const std::size_t k = lower.size();
  const std::size_t m = eq_matrix.rows();
  if (upper.size() != k || (m > 0 && eq_matrix.cols() != k)) {
    throw std::invalid_argument("feasibility_min_infinity_norm: shape mismatch");
  }
  if (k == 0) throw std::invalid_argument("feasibility_min_infinity_norm: empty box");

  // Bound on ||A x||_inf over the box, used to box the auxiliary variables.
  double t_max = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      s += std::abs(eq_matrix(i, j)) * std::max(std::abs(lower[j]), std::abs(upper[j]));
    }
    t_max = std::max(t_max, s);
  }

  // Layout: x (k) | t | p (m) | q (m).
  const std::size_t vars = k + 1 + 2 * m;
  BoxEqLP prob;
  prob.lower.assign(vars, 0.0);
  prob.upper.assign(vars, 2.0 * t_max);
  prob.objective.assign(vars, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    prob.lower[j] = lower[j];
    prob.upper[j] = upper[j];
  }
  prob.upper[k] = t_max;
  prob.objective[k] = -1.0;
  prob.eq_matrix = Matrix(2 * m, vars);
  prob.eq_rhs.assign(2 * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      prob.eq_matrix(i, j) = eq_matrix(i, j);
      prob.eq_matrix(m + i, j) = eq_matrix(i, j);
    }
    // A x - t + p = 0  and  A x + t - q = 0.
    prob.eq_matrix(i, k) = -1.0;
    prob.eq_matrix(i, k + 1 + i) = 1.0;
    prob.eq_matrix(m + i, k) = 1.0;
    prob.eq_matrix(m + i, k + 1 + m + i) = -1.0;
  }

  const LPResult res = solve(prob, eps_lp);
  MinNormResult out;
  out.status = res.status;
  if (res.status != Status::kOptimal) return out;
  out.x.assign(res.solution.begin(), res.solution.begin() + static_cast<std::ptrdiff_t>(k));
  out.value = m == 0 ? 0.0 : norm_inf(eq_matrix.apply(out.x));
  return out;
}

}  // namespace l1landscape::lp
