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

#include "l1landscape/second_order.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "l1landscape/errors.h"
#include "l1landscape/first_order.h"
#include "l1landscape/lp.h"
#include "l1landscape/objective.h"
#include "l1landscape/random.h"
#include "l1landscape/residual.h"
#include "l1landscape/sign.h"
#include "l1landscape/stationarity.h"

namespace l1landscape {

namespace {

// Coefficient of a symmetric pair entry in w^T Q w.
double pair_weight(std::span<const double> w, std::size_t i, std::size_t j) {
  return i == j ? w[i] * w[i] : 2.0 * w[i] * w[j];
}

Vector sample_ball(std::mt19937_64& rng, std::size_t n, double radius) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vector v(n);
  for (double& x : v) x = normal(rng);
  const double len = norm2(v);
  const double r = radius * std::pow(unit(rng), 1.0 / static_cast<double>(n));
  for (double& x : v) x = len > 0.0 ? x * r / len : 0.0;
  return v;
}

}  // namespace

double ExtendedReal::value() const {
  if (infinite_) throw std::logic_error("ExtendedReal::value: value is +infinity");
  return value_;
}

std::string_view to_string(PointKind k) {
  switch (k) {
    case PointKind::kGlobalMin: return "GLOBAL_MIN";
    case PointKind::kSpuriousStationary: return "SPURIOUS_STATIONARY";
    case PointKind::kNotStationary: return "NOT_STATIONARY";
  }
  return "UNKNOWN";
}

SecondOrderFace second_order_face(std::span<const double> u, std::span<const double> ustar,
                                  double eps_zero) {
  SecondOrderFace face{SubdifferentialModel::Build(u, ustar, eps_zero), {}, {}};
  face.kernel_matrix = face.model.free_map();
  face.kernel_rhs = negate(face.model.fixed_part());
  return face;
}

Matrix spurious_face_matrix(std::span<const double> ustar) {
  const std::size_t n = ustar.size();
  Matrix q(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q(i, j) = -sign_of(ustar[i] * ustar[j]);
  }
  return q;
}

ExtendedReal second_subderivative(std::span<const double> u, std::span<const double> ustar,
                                  std::span<const double> w, const Tolerances& tol) {
  require_same_dim(u, ustar, "second_subderivative");
  require_same_dim(u, w, "second_subderivative");
  if (!is_stationary_closed_form(u, ustar, tol.eps_zero).is_stationary) {
    throw NotStationaryError("second_subderivative: u is not a stationary point");
  }
  // Outside the critical cone the second subderivative is +infinity.
  if (directional_derivative(u, ustar, w, tol.eps_zero) > tol.eps_dir) {
    return ExtendedReal::PlusInfinity();
  }

  const SecondOrderFace face = second_order_face(u, ustar, tol.eps_zero);
  const auto& free = face.model.free_pairs();
  double constant = 0.0;
  for (const FixedEntry& e : face.model.fixed_entries()) {
    constant += e.sign * pair_weight(w, e.i, e.j);
  }
  if (free.empty()) return ExtendedReal::Finite(constant);

  lp::BoxEqLP prob;
  prob.lower.assign(free.size(), -1.0);
  prob.upper.assign(free.size(), 1.0);
  prob.objective.resize(free.size());
  for (std::size_t p = 0; p < free.size(); ++p) {
    prob.objective[p] = pair_weight(w, free[p].i, free[p].j);
  }
  prob.eq_matrix = face.kernel_matrix;
  prob.eq_rhs = face.kernel_rhs;
  const lp::LPResult res = lp::solve(prob, tol.eps_lp);
  if (res.status != lp::Status::kOptimal) {
    throw NumericalFailure(std::string("second_subderivative: face LP returned ") +
                           std::string(lp::to_string(res.status)));
  }
  return ExtendedReal::Finite(constant + res.value);
}

EscapeCurvature escape_curvature(std::span<const double> u, std::span<const double> ustar,
                                 const Tolerances& tol) {
  const StationarityVerdict verdict = is_stationary_closed_form(u, ustar, tol.eps_zero);
  if (!verdict.is_stationary) {
    throw NotStationaryError("escape_curvature: u is not a stationary point");
  }
  if (verdict.kind != StationaryKind::kSpurious) {
    throw GroundTruthError("escape_curvature: u is a ground truth");
  }
  EscapeCurvature out;
  out.direction = sub(ustar, u);
  const ExtendedReal lp_value = second_subderivative(u, ustar, out.direction, tol);
  const double expected = -norm1(ustar) * norm1(ustar);
  const double slack = 1e-9 * std::max(1.0, -expected);
  if (!lp_value.is_finite()) {
    throw std::logic_error("escape_curvature: u* - u left the critical cone");
  }
  const Vector qw = spurious_face_matrix(ustar).apply(out.direction);
  const double analytic = dot(out.direction, qw);
  if (std::abs(lp_value.value() - expected) > slack || std::abs(analytic - expected) > slack) {
    throw std::logic_error("escape_curvature: LP face value " +
                           std::to_string(lp_value.value()) + " and analytic value " +
                           std::to_string(analytic) + " disagree with -||u*||_1^2 = " +
                           std::to_string(expected));
  }
  out.value = lp_value.value();
  return out;
}

double second_subderivative_numeric(std::span<const double> u, std::span<const double> ustar,
                                    std::span<const double> w, const NumericGrid& grid) {
  require_same_dim(u, ustar, "second_subderivative_numeric");
  require_same_dim(u, w, "second_subderivative_numeric");
  if (!(grid.t0 > 0.0) || !(grid.rho > 0.0 && grid.rho < 1.0)) {
    throw std::invalid_argument("second_subderivative_numeric: need t0 > 0, rho in (0, 1)");
  }
  const std::size_t n = u.size();
  const double f0 = objective(u, ustar);
  const double delta_w = grid.ball_rel * norm2(w);
  const std::size_t levels = grid.levels + 1;
  std::vector<double> level_min(levels, std::numeric_limits<double>::infinity());

  parallel_for(levels, [&](std::size_t k) {
    const double t = grid.t0 * std::pow(grid.rho, static_cast<double>(k));
    const double radius = delta_w * std::pow(grid.rho, static_cast<double>(k));
    const double denom = 0.5 * t * t;
    double best = (objective(axpy(u, t, w), ustar) - f0) / denom;
    if (radius > 0.0) {
      for (std::size_t m = 1; m <= grid.ball_samples; ++m) {
        std::mt19937_64 rng = stream_for(grid.seed, (static_cast<std::uint64_t>(k) << 32) | m);
        const Vector wp = add(w, sample_ball(rng, n, radius));
        best = std::min(best, (objective(axpy(u, t, wp), ustar) - f0) / denom);
      }
    }
    level_min[k] = best;
  });
  return *std::min_element(level_min.begin(), level_min.end());
}

SteepestDescent steepest_descent_direction(std::span<const double> u,
                                           std::span<const double> ustar,
                                           const Tolerances& tol) {
  require_same_dim(u, ustar, "steepest_descent_direction");
  const SubdifferentialModel model = SubdifferentialModel::Build(u, ustar, tol.eps_zero);
  const std::size_t n = model.dim();
  const Vector linear = model.fixed_part();

  // Free pairs whose row a_p = u_j e_i + u_i e_j is nonzero.
  const Matrix a_free = model.free_map();
  std::vector<std::size_t> active;
  for (std::size_t p = 0; p < model.free_pairs().size(); ++p) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) s += std::abs(a_free(r, p));
    if (s > 0.0) active.push_back(p);
  }
  const std::size_t np = active.size();

  // Layout: d (n) | t (np) | p (np) | q (np);  minimize c^T d + sum t.
  const std::size_t vars = n + 3 * np;
  lp::BoxEqLP prob;
  prob.lower.assign(vars, 0.0);
  prob.upper.assign(vars, 0.0);
  prob.objective.assign(vars, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    prob.lower[j] = -1.0;
    prob.upper[j] = 1.0;
    prob.objective[j] = -linear[j];
  }
  prob.eq_matrix = Matrix(2 * np, vars);
  prob.eq_rhs.assign(2 * np, 0.0);
  for (std::size_t a = 0; a < np; ++a) {
    const std::size_t p = active[a];
    double bound = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      prob.eq_matrix(a, r) = a_free(r, p);
      prob.eq_matrix(np + a, r) = a_free(r, p);
      bound += std::abs(a_free(r, p));
    }
    const std::size_t t = n + a;
    prob.upper[t] = bound;
    prob.objective[t] = -1.0;
    prob.upper[n + np + a] = 2.0 * bound;
    prob.upper[n + 2 * np + a] = 2.0 * bound;
    // a^T d - t + p = 0,  a^T d + t - q = 0
    prob.eq_matrix(a, t) = -1.0;
    prob.eq_matrix(a, n + np + a) = 1.0;
    prob.eq_matrix(np + a, t) = 1.0;
    prob.eq_matrix(np + a, n + 2 * np + a) = -1.0;
  }
  const lp::LPResult res = lp::solve(prob, tol.eps_lp);
  if (res.status != lp::Status::kOptimal) {
    throw NumericalFailure("steepest_descent_direction: LP did not reach optimality");
  }
  SteepestDescent out;
  out.direction.assign(res.solution.begin(), res.solution.begin() + static_cast<std::ptrdiff_t>(n));
  out.slope = directional_derivative(u, ustar, out.direction, tol.eps_zero);
  return out;
}

PointClassification classify_point(std::span<const double> u, std::span<const double> ustar,
                                   const Tolerances& tol) {
  require_same_dim(u, ustar, "classify_point");
  PointClassification out;
  const StationarityVerdict verdict = is_stationary_closed_form(u, ustar, tol.eps_zero);
  if (verdict.kind == StationaryKind::kGroundTruthPlus ||
      verdict.kind == StationaryKind::kGroundTruthMinus) {
    out.kind = PointKind::kGlobalMin;
    return out;
  }
  if (verdict.kind == StationaryKind::kSpurious) {
    const EscapeCurvature esc = escape_curvature(u, ustar, tol);
    out.kind = PointKind::kSpuriousStationary;
    out.escape_direction = esc.direction;
    out.curvature = esc.value;
    return out;
  }

  out.kind = PointKind::kNotStationary;
  const Vector g = subgradient_select(u, ustar, MidpointSelection{}, tol.eps_zero);
  const double g_norm = norm2(g);
  if (g_norm > 0.0) {
    const Vector d = scale(-1.0 / g_norm, g);
    const double slope = directional_derivative(u, ustar, d, tol.eps_zero);
    if (slope < -tol.eps_dir) {
      out.descent_direction = d;
      out.descent_slope = slope;
      return out;
    }
  }
  const SteepestDescent sd = steepest_descent_direction(u, ustar, tol);
  const double d_norm = norm2(sd.direction);
  if (!(sd.slope < -tol.eps_dir) || d_norm == 0.0) {
    throw std::logic_error(
        "classify_point: closed form rejects stationarity but no descent direction exists");
  }
  out.descent_direction = scale(1.0 / d_norm, sd.direction);
  out.descent_slope = sd.slope / d_norm;
  return out;
}

}  // namespace l1landscape
