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

#ifndef L1LANDSCAPE_FIRST_ORDER_H_
#define L1LANDSCAPE_FIRST_ORDER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "l1landscape/linalg.h"
#include "l1landscape/tolerances.h"

namespace l1landscape {

// df(u)(w) = max { <Z u, w> : Z in the sign boxes }, evaluated in closed
// form: fixed entries contribute linearly, a free diagonal entry contributes
// |u_i w_i| and a free off-diagonal pair {i, j} contributes |u_i w_j + u_j w_i|.
double directional_derivative(std::span<const double> u, std::span<const double> ustar,
                              std::span<const double> w, double eps_zero = kDefaultEpsZero);

enum class ConeCoord {
  kHalfLine,  // w_j in s_j * R_-  (s_j = Sign(u_j))
  kFree,      // w_j in R
  kZero,      // w_j = 0
};

struct CriticalCone {
  std::vector<ConeCoord> coord;
  std::vector<double> half_line_sign;  // s_j, meaningful for kHalfLine only
};

enum class GroundTruthPolicy {
  kReject,        // throw GroundTruthError at +-u*
  kTrivialCone,   // return {0} (every coordinate kZero) at +-u*, u* != 0
};

// Critical cone {w : df(u)(w) = 0} at a stationary u. Spurious points (and
// u = 0, where the cone is all of R^n) only unless the policy says otherwise.
// Throws NotStationaryError / GroundTruthError.
CriticalCone critical_cone(std::span<const double> u, std::span<const double> ustar,
                           double eps_zero = kDefaultEpsZero,
                           GroundTruthPolicy policy = GroundTruthPolicy::kReject);

bool cone_contains(const CriticalCone& cone, std::span<const double> w,
                   double eps_zero = kDefaultEpsZero);

bool cone_membership(std::span<const double> u, std::span<const double> ustar,
                     std::span<const double> w, double eps_zero = kDefaultEpsZero);

// min{alpha, alpha |supp(u*)| / 2}, alpha = min_{i in supp} |u*_i|.
// Throws std::invalid_argument for u* = 0.
double sharpness_coefficient(std::span<const double> ustar);

struct GrowthReport {
  double beta_hat = 0.0;   // sharpness_coefficient / 2
  double radius = 0.0;
  std::size_t samples = 0;
  std::size_t violations = 0;
  // min over samples of f(u) - f(u*) - beta_hat ||u - u*||_1
  double worst_margin = 0.0;
};

// Samples u uniformly from the l_inf ball of the given radius around u* and
// counts violations of f(u) - f(u*) >= beta_hat ||u - u*||_1.
GrowthReport growth_check(std::span<const double> ustar, double radius, std::size_t samples,
                          std::uint64_t seed);

}  // namespace l1landscape

#endif  // L1LANDSCAPE_FIRST_ORDER_H_
