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

#include "l1landscape/subdifferential.h"

#include <cmath>
#include <stdexcept>
#include <type_traits>

#include "l1landscape/errors.h"
#include "l1landscape/lp.h"
#include "l1landscape/sign.h"

namespace l1landscape {

SubdifferentialModel SubdifferentialModel::FromPattern(const ResidualPattern& pattern,
                                                       std::span<const double> u) {
  if (u.size() != pattern.n) throw DimensionMismatch("SubdifferentialModel: size mismatch");
  SubdifferentialModel m;
  m.base_point_.assign(u.begin(), u.end());
  for (std::size_t i = 0; i < pattern.n; ++i) {
    for (std::size_t j = i; j < pattern.n; ++j) {
      const EntrySign s = pattern.sign(i, j);
      if (s == EntrySign::kZero) {
        m.free_.push_back({i, j});
      } else {
        m.fixed_.push_back({i, j, s == EntrySign::kPos ? 1.0 : -1.0});
      }
    }
  }
  return m;
}

SubdifferentialModel SubdifferentialModel::Build(std::span<const double> u,
                                                 std::span<const double> ustar,
                                                 double eps_zero) {
  return FromPattern(residual_pattern(u, ustar, eps_zero), u);
}

Matrix SubdifferentialModel::matrix(std::span<const double> z) const {
  if (z.size() != free_.size()) throw DimensionMismatch("SubdifferentialModel::matrix");
  const std::size_t n = dim();
  Matrix zm(n, n);
  for (const FixedEntry& e : fixed_) {
    zm(e.i, e.j) = e.sign;
    zm(e.j, e.i) = e.sign;
  }
  for (std::size_t p = 0; p < free_.size(); ++p) {
    zm(free_[p].i, free_[p].j) = z[p];
    zm(free_[p].j, free_[p].i) = z[p];
  }
  return zm;
}

Vector SubdifferentialModel::fixed_part() const {
  const Vector& u = base_point_;
  Vector g(dim(), 0.0);
  for (const FixedEntry& e : fixed_) {
    g[e.i] += e.sign * u[e.j];
    if (e.i != e.j) g[e.j] += e.sign * u[e.i];
  }
  return g;
}

Matrix SubdifferentialModel::free_map() const {
  const Vector& u = base_point_;
  Matrix a(dim(), free_.size());
  for (std::size_t p = 0; p < free_.size(); ++p) {
    const auto [i, j] = free_[p];
    a(i, p) += u[j];
    if (i != j) a(j, p) += u[i];
  }
  return a;
}

bool SubdifferentialModel::contains_matrix(const Matrix& z, double tol) const {
  const std::size_t n = dim();
  if (z.rows() != n || z.cols() != n || !z.is_symmetric(tol)) return false;
  for (const FixedEntry& e : fixed_) {
    if (std::abs(z(e.i, e.j) - e.sign) > tol) return false;
  }
  for (const FreePair& p : free_) {
    if (std::abs(z(p.i, p.j)) > 1.0 + tol) return false;
  }
  return true;
}

double SubdifferentialModel::membership_gap(std::span<const double> g, double eps_lp) const {
  if (g.size() != dim()) throw DimensionMismatch("membership_gap: size mismatch");
  // Columns: free entries in [-1, 1], then one fixed column carrying
  // fixed_part() - g with bounds [1, 1].
  const std::size_t n = dim();
  const std::size_t k = free_.size() + 1;
  const Matrix a_free = free_map();
  const Vector offset = sub(fixed_part(), g);
  Matrix a(n, k);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c + 1 < k; ++c) a(r, c) = a_free(r, c);
    a(r, k - 1) = offset[r];
  }
  Vector lower(k, -1.0);
  Vector upper(k, 1.0);
  lower[k - 1] = 1.0;
  const lp::MinNormResult res = lp::feasibility_min_infinity_norm(lower, upper, a, eps_lp);
  if (res.status != lp::Status::kOptimal) {
    throw NumericalFailure("membership_gap: LP did not reach optimality");
  }
  return res.value;
}

Matrix selection_matrix(const SubdifferentialModel& model, std::span<const double> ustar,
                        const SelectionRule& rule, double eps_zero) {
  return std::visit(
      [&](const auto& r) -> Matrix {
        using T = std::decay_t<decltype(r)>;
        const std::size_t n = model.dim();
        if constexpr (std::is_same_v<T, MidpointSelection>) {
          return model.matrix(Vector(model.free_pairs().size(), 0.0));
        } else if constexpr (std::is_same_v<T, AntiGroundTruthSelection>) {
          Vector z(model.free_pairs().size());
          for (std::size_t p = 0; p < z.size(); ++p) {
            const auto [i, j] = model.free_pairs()[p];
            z[p] = -sign_of(ustar[i] * ustar[j]);
          }
          return model.matrix(z);
        } else {
          if (r.s.rows() != n || r.s.cols() != n) {
            throw std::invalid_argument("custom selection: S has the wrong shape");
          }
          if (!r.s.is_symmetric(eps_zero)) {
            throw std::invalid_argument("custom selection: S is not symmetric");
          }
          if (!model.contains_matrix(r.s, eps_zero)) {
            throw std::invalid_argument("custom selection: S leaves the sign boxes");
          }
          return r.s;
        }
      },
      rule);
}

Vector subgradient_select(std::span<const double> u, std::span<const double> ustar,
                          const SelectionRule& rule, double eps_zero) {
  const SubdifferentialModel model = SubdifferentialModel::Build(u, ustar, eps_zero);
  return selection_matrix(model, ustar, rule, eps_zero).apply(u);
}

}  // namespace l1landscape
