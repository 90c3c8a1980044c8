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

#ifndef L1LANDSCAPE_STATIONARITY_H_
#define L1LANDSCAPE_STATIONARITY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "l1landscape/linalg.h"
#include "l1landscape/tolerances.h"

namespace l1landscape {

enum class StationaryKind { kGroundTruthPlus, kGroundTruthMinus, kSpurious, kNotStationary };
std::string_view to_string(StationaryKind k);

struct StationarityVerdict {
  bool is_stationary = false;
  StationaryKind kind = StationaryKind::kNotStationary;
  // Symmetric Z inside the sign boxes with Z u ~ 0; present iff stationary.
  std::optional<Matrix> witness;
  // min ||Z u||_inf over the sign boxes (LP certifier only).
  std::optional<double> violation;
};

// Closed-form test: u = +-u*, or |u_i| <= |u*_i| for all i, u_i = 0 where
// u*_i = 0, and sum_i Sign(u*_i) u_i = 0. For u* = 0 the only stationary
// point is u = 0 = u*, reported as kGroundTruthPlus.
StationarityVerdict is_stationary_closed_form(std::span<const double> u,
                                              std::span<const double> ustar,
                                              double eps_zero = kDefaultEpsZero);

// LP test: 0 in the subdifferential iff min ||Z u||_inf <= eps_lp over the
// sign boxes. Throws NumericalFailure if the LP does.
StationarityVerdict is_stationary_lp(std::span<const double> u, std::span<const double> ustar,
                                     double eps_zero = kDefaultEpsZero,
                                     double eps_lp = kDefaultEpsLp);

struct Projection {
  Vector point;
  double distance = 0.0;
};

// Euclidean projection onto the spurious polytope
//   {u : |u_i| <= |u*_i|, sum_i Sign(u*_i) u_i = 0}
// (coordinates with u*_i = 0 pinned to zero) by bisection on the hyperplane
// multiplier. Requires u* != 0.
Projection project_to_spurious_set(std::span<const double> y, std::span<const double> ustar);

// min(||y - u*||, ||y + u*||).
double distance_to_ground_truths(std::span<const double> y, std::span<const double> ustar);
// Distance to the polytope component; ||y|| when u* = 0 (the set is {0}).
double distance_to_spurious_set(std::span<const double> y, std::span<const double> ustar);
// Distance to the full stationary set (polytope union {+-u*}).
double distance_to_stationary_set(std::span<const double> y, std::span<const double> ustar);

struct SeparationEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double expected = 0.0;  // sqrt(2n/pi)
};

// Monte Carlo mean of ||u*||_1 / sqrt(n), the distance from u* to the
// hyperplane Sign(u*)^T u = 0, over standard Gaussian u*.
SeparationEstimate gaussian_separation(std::size_t n, std::size_t trials, std::uint64_t seed);

}  // namespace l1landscape

#endif  // L1LANDSCAPE_STATIONARITY_H_
