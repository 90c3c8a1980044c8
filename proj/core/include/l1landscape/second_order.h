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

#ifndef L1LANDSCAPE_SECOND_ORDER_H_
#define L1LANDSCAPE_SECOND_ORDER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "l1landscape/linalg.h"
#include "l1landscape/subdifferential.h"
#include "l1landscape/tolerances.h"

namespace l1landscape {

// A real number or +infinity. Never encodes infinity as a large double.
class ExtendedReal {
 public:
  static ExtendedReal Finite(double v) { return ExtendedReal(v, false); }
  static ExtendedReal PlusInfinity() { return ExtendedReal(0.0, true); }

  bool is_finite() const { return !infinite_; }
  bool is_plus_infinity() const { return infinite_; }
  // Precondition: is_finite().
  double value() const;

 private:
  ExtendedReal(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_;
  bool infinite_;
};

// The face Q(u) = {Q in sign boxes, Q symmetric, Q u = 0}, stored as the
// subdifferential model at u plus the kernel constraint rows.
struct SecondOrderFace {
  SubdifferentialModel model;
  Matrix kernel_matrix;  // n x F: Q u = model.fixed_part() + kernel_matrix z
  Vector kernel_rhs;     // -model.fixed_part()
};

SecondOrderFace second_order_face(std::span<const double> u, std::span<const double> ustar,
                                  double eps_zero = kDefaultEpsZero);

// -Sign(u*_i u*_j) on supp(u*) x supp(u*), zero elsewhere: the analytic face
// member at a spurious stationary point.
Matrix spurious_face_matrix(std::span<const double> ustar);

// d^2 f(u; 0)(w): +inf when df(u)(w) > eps_dir, otherwise
// max { w^T Q w : Q in Q(u) } by LP. Throws NotStationaryError for
// non-stationary u and NumericalFailure on LP failure.
ExtendedReal second_subderivative(std::span<const double> u, std::span<const double> ustar,
                                  std::span<const double> w, const Tolerances& tol = {});

struct EscapeCurvature {
  Vector direction;  // u* - u
  double value = 0.0;
};

// Escape direction u* - u at a spurious point with its curvature -||u*||_1^2,
// computed by LP and checked against the closed form (1e-9). Throws
// GroundTruthError / NotStationaryError for non-spurious u, std::logic_error
// if the two routes disagree.
EscapeCurvature escape_curvature(std::span<const double> u, std::span<const double> ustar,
                                 const Tolerances& tol = {});

struct NumericGrid {
  double t0 = 1e-2;
  double rho = 0.5;
  std::size_t levels = 12;      // K: t_k = t0 rho^k, k = 0..K
  double ball_rel = 1e-3;       // delta_w = ball_rel * ||w||
  std::size_t ball_samples = 64;  // M
  std::uint64_t seed = 0x5eed;
};

// min over the grid of (f(u + t w') - f(u)) / (t^2 / 2), with w' = w and M
// points of the ball of radius delta_w rho^k around w at level k. Sample
// (k, m) is drawn from its own stream, so refining K or M only adds points.
double second_subderivative_numeric(std::span<const double> u, std::span<const double> ustar,
                                    std::span<const double> w, const NumericGrid& grid = {});

enum class PointKind { kGlobalMin, kSpuriousStationary, kNotStationary };
std::string_view to_string(PointKind k);

struct PointClassification {
  PointKind kind = PointKind::kNotStationary;
  std::optional<Vector> escape_direction;
  std::optional<double> curvature;
  std::optional<Vector> descent_direction;
  // df(u)(descent_direction) < 0 for kNotStationary.
  std::optional<double> descent_slope;
};

// Global minimum, spurious stationary point with an escape direction of
// negative curvature, or a non-stationary point with a verified descent
// direction. The descent direction is the normalized negative midpoint
// subgradient; if that fails the steepest l_inf descent direction is found by LP.
PointClassification classify_point(std::span<const double> u, std::span<const double> ustar,
                                   const Tolerances& tol = {});

// argmin { df(u)(d) : ||d||_inf <= 1 } and its value (= -min_{g in df(u)} ||g||_1).
struct SteepestDescent {
  Vector direction;
  double slope = 0.0;
};
SteepestDescent steepest_descent_direction(std::span<const double> u,
                                           std::span<const double> ustar,
                                           const Tolerances& tol = {});

}  // namespace l1landscape

#endif  // L1LANDSCAPE_SECOND_ORDER_H_
