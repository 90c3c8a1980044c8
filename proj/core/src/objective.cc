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

#include "l1landscape/objective.h"

#include <cmath>
#include <stdexcept>

#include "l1landscape/linalg.h"

namespace l1landscape {

double objective(std::span<const double> u, std::span<const double> ustar) {
  require_same_dim(u, ustar, "objective");
  require_finite(u, "objective");
  require_finite(ustar, "objective");
  const std::size_t n = u.size();
  double off = 0.0;
  double diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    diag += std::abs(u[i] * u[i] - ustar[i] * ustar[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      off += std::abs(u[i] * u[j] - ustar[i] * ustar[j]);
    }
  }
  // Off-diagonal terms appear twice in the full sum.
  return 0.5 * diag + off;
}

double finite_difference_slope(std::span<const double> u, std::span<const double> ustar,
                               std::span<const double> w, double t) {
  require_same_dim(u, ustar, "finite_difference_slope");
  require_same_dim(u, w, "finite_difference_slope");
  if (!(t > 0.0)) throw std::invalid_argument("finite_difference_slope: t must be > 0");
  const Vector moved = axpy(u, t, w);
  return (objective(moved, ustar) - objective(u, ustar)) / t;
}

}  // namespace l1landscape
