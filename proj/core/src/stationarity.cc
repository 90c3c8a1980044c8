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

#include "l1landscape/stationarity.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "l1landscape/errors.h"
#include "l1landscape/lp.h"
#include "l1landscape/random.h"
#include "l1landscape/residual.h"
#include "l1landscape/sign.h"
#include "l1landscape/subdifferential.h"

namespace l1landscape {

namespace {

constexpr int kMaxBisection = 200;
constexpr double kBisectionTol = 1e-12;

StationaryKind ground_truth_kind(std::span<const double> u, std::span<const double> ustar,
                                 double eps_zero) {
  if (dist_inf(u, ustar) <= eps_zero) return StationaryKind::kGroundTruthPlus;
  Vector minus = negate(ustar);
  if (dist_inf(u, minus) <= eps_zero) return StationaryKind::kGroundTruthMinus;
  return StationaryKind::kNotStationary;
}

// -Sign(u*_i u*_j) on the support, zero elsewhere.
Matrix anti_sign_matrix(std::span<const double> ustar) {
  const std::size_t n = ustar.size();
  Matrix z(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) z(i, j) = -sign_of(ustar[i] * ustar[j]);
  }
  return z;
}

// u_i(lambda) = clip(y_i - lambda s_i, -|u*_i|, |u*_i|).
void clipped_point(std::span<const double> y, std::span<const double> ustar, double lambda,
                   Vector& out) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double s = sign_of(ustar[i]);
    const double r = std::abs(ustar[i]);
    out[i] = std::clamp(y[i] - lambda * s, -r, r);
  }
}

double hyperplane_value(std::span<const double> ustar, std::span<const double> p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += sign_of(ustar[i]) * p[i];
  return s;
}

}  // namespace

std::string_view to_string(StationaryKind k) {
  switch (k) {
    case StationaryKind::kGroundTruthPlus: return "GROUND_TRUTH_PLUS";
    case StationaryKind::kGroundTruthMinus: return "GROUND_TRUTH_MINUS";
    case StationaryKind::kSpurious: return "SPURIOUS";
    case StationaryKind::kNotStationary: return "NOT_STATIONARY";
  }
  return "UNKNOWN";
}

StationarityVerdict is_stationary_closed_form(std::span<const double> u,
                                              std::span<const double> ustar,
                                              double eps_zero) {
  require_same_dim(u, ustar, "is_stationary_closed_form");
  const std::size_t n = u.size();
  StationarityVerdict v;

  if (is_zero_vector(ustar)) {
    // f = ||u||_1^2 / 2 has the single stationary point u = 0 = u*.
    if (is_zero_vector(u, eps_zero)) {
      v.is_stationary = true;
      v.kind = StationaryKind::kGroundTruthPlus;
      v.witness = Matrix(n, n);
    }
    return v;
  }

  const StationaryKind gt = ground_truth_kind(u, ustar, eps_zero);
  if (gt != StationaryKind::kNotStationary) {
    v.is_stationary = true;
    v.kind = gt;
    v.witness = Matrix(n, n);
    return v;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const double bound = ustar[i] == 0.0 ? 0.0 : std::abs(ustar[i]);
    if (std::abs(u[i]) > bound + eps_zero) return v;
  }
  if (std::abs(hyperplane_value(ustar, u)) > eps_zero) return v;

  v.is_stationary = true;
  v.kind = StationaryKind::kSpurious;
  v.witness = anti_sign_matrix(ustar);
  return v;
}

StationarityVerdict is_stationary_lp(std::span<const double> u, std::span<const double> ustar,
                                     double eps_zero, double eps_lp) {
  require_same_dim(u, ustar, "is_stationary_lp");
  const SubdifferentialModel model = SubdifferentialModel::Build(u, ustar, eps_zero);
  const std::size_t n = model.dim();
  const std::size_t free_count = model.free_pairs().size();

  // Columns: one per free pair in [-1, 1], plus the fixed contribution as an
  // offset column pinned to 1.
  const Matrix a_free = model.free_map();
  const Vector offset = model.fixed_part();
  Matrix a(n, free_count + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < free_count; ++c) a(r, c) = a_free(r, c);
    a(r, free_count) = offset[r];
  }
  Vector lower(free_count + 1, -1.0);
  Vector upper(free_count + 1, 1.0);
  lower[free_count] = 1.0;

  const lp::MinNormResult res = lp::feasibility_min_infinity_norm(lower, upper, a, eps_lp);
  if (res.status != lp::Status::kOptimal) {
    throw NumericalFailure(std::string("is_stationary_lp: LP returned ") +
                           std::string(lp::to_string(res.status)));
  }

  StationarityVerdict v;
  v.violation = res.value;
  if (res.value > eps_lp) return v;

  v.is_stationary = true;
  const Vector z(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(free_count));
  v.witness = model.matrix(z);
  if (is_zero_vector(ustar)) {
    v.kind = StationaryKind::kGroundTruthPlus;
  } else {
    const StationaryKind gt = ground_truth_kind(u, ustar, eps_zero);
    v.kind = gt == StationaryKind::kNotStationary ? StationaryKind::kSpurious : gt;
  }
  return v;
}

Projection project_to_spurious_set(std::span<const double> y, std::span<const double> ustar) {
  require_same_dim(y, ustar, "project_to_spurious_set");
  if (is_zero_vector(ustar)) {
    throw std::invalid_argument("project_to_spurious_set: u* must be nonzero");
  }
  const std::size_t n = y.size();
  Vector p(n);

  // phi(lambda) = Sign(u*)^T u(lambda) is nonincreasing, phi(-L) >= 0 >= phi(L).
  const double big = norm_inf(y) + norm_inf(ustar) + 1.0;
  double lo = -big;
  double hi = big;
  int it = 0;
  for (; it < kMaxBisection && hi - lo > kBisectionTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    clipped_point(y, ustar, mid, p);
    if (hyperplane_value(ustar, p) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo > kBisectionTol * std::max(1.0, big)) {
    throw std::logic_error("project_to_spurious_set: bisection did not converge");
  }

  // Polish: on the final bracket the active set is fixed, so phi is affine
  // in lambda and its root is available in closed form.
  double lambda = 0.5 * (lo + hi);
  clipped_point(y, ustar, lambda, p);
  double free_count = 0.0;
  double numer = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (ustar[i] == 0.0) continue;
    const double s = sign_of(ustar[i]);
    const double r = std::abs(ustar[i]);
    const double raw = y[i] - lambda * s;
    if (raw > -r && raw < r) {
      free_count += 1.0;
      numer += s * y[i];
    } else {
      numer += s * p[i];
    }
  }
  if (free_count > 0.0) {
    const double exact = numer / free_count;
    if (exact >= lo - kBisectionTol && exact <= hi + kBisectionTol) {
      Vector q(n);
      clipped_point(y, ustar, exact, q);
      if (std::abs(hyperplane_value(ustar, q)) <= std::abs(hyperplane_value(ustar, p))) {
        p = std::move(q);
      }
    }
  }
  return {p, dist2(y, p)};
}

double distance_to_ground_truths(std::span<const double> y, std::span<const double> ustar) {
  require_same_dim(y, ustar, "distance_to_ground_truths");
  double plus = 0.0;
  double minus = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    plus += (y[i] - ustar[i]) * (y[i] - ustar[i]);
    minus += (y[i] + ustar[i]) * (y[i] + ustar[i]);
  }
  return std::sqrt(std::min(plus, minus));
}

double distance_to_spurious_set(std::span<const double> y, std::span<const double> ustar) {
  require_same_dim(y, ustar, "distance_to_spurious_set");
  if (is_zero_vector(ustar)) return norm2(y);
  return project_to_spurious_set(y, ustar).distance;
}

double distance_to_stationary_set(std::span<const double> y, std::span<const double> ustar) {
  return std::min(distance_to_spurious_set(y, ustar), distance_to_ground_truths(y, ustar));
}

SeparationEstimate gaussian_separation(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n == 0 || trials == 0) {
    throw std::invalid_argument("gaussian_separation: n and trials must be >= 1");
  }
  std::vector<double> dist(trials);
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  parallel_for(trials, [&](std::size_t t) {
    std::mt19937_64 rng = stream_for(seed, t);
    std::normal_distribution<double> normal(0.0, 1.0);
    double l1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) l1 += std::abs(normal(rng));
    dist[t] = l1 * inv_sqrt_n;
  });

  double mean = 0.0;
  for (double d : dist) mean += d;
  mean /= static_cast<double>(trials);
  double var = 0.0;
  for (double d : dist) var += (d - mean) * (d - mean);
  SeparationEstimate est;
  est.mean = mean;
  est.std_error = trials > 1 ? std::sqrt(var / static_cast<double>(trials - 1) /
                                       static_cast<double>(trials))
                           : 0.0;
  est.expected = std::sqrt(2.0 * static_cast<double>(n) / std::numbers::pi);
  return est;
}

}  // namespace l1landscape
