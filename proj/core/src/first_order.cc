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

#include "l1landscape/first_order.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "l1landscape/errors.h"
#include "l1landscape/objective.h"
#include "l1landscape/random.h"
#include "l1landscape/residual.h"
#include "l1landscape/sign.h"
#include "l1landscape/stationarity.h"

namespace l1landscape {

double directional_derivative(std::span<const double> u, std::span<const double> ustar,
                              std::span<const double> w, double eps_zero) {
  require_same_dim(u, ustar, "directional_derivative");
  require_same_dim(u, w, "directional_derivative");
  const ResidualPattern pattern = residual_pattern(u, ustar, eps_zero);
  const std::size_t n = u.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double pair = i == j ? u[i] * w[i] : u[j] * w[i] + u[i] * w[j];
      switch (pattern.sign(i, j)) {
        case EntrySign::kPos: total += pair; break;
        case EntrySign::kNeg: total -= pair; break;
        case EntrySign::kZero: total += std::abs(pair); break;
      }
    }
  }
  return total;
}

CriticalCone critical_cone(std::span<const double> u, std::span<const double> ustar,
                           double eps_zero, GroundTruthPolicy policy) {
  require_same_dim(u, ustar, "critical_cone");
  const std::size_t n = u.size();
  CriticalCone cone;
  cone.coord.assign(n, ConeCoord::kFree);
  cone.half_line_sign.assign(n, 0.0);
  // df(0) = {0}, so every direction is critical.
  if (is_zero_vector(u, eps_zero)) return cone;

  const StationarityVerdict verdict = is_stationary_closed_form(u, ustar, eps_zero);
  if (!verdict.is_stationary) {
    throw NotStationaryError("critical_cone: u is not a stationary point");
  }
  if (verdict.kind != StationaryKind::kSpurious) {
    if (policy == GroundTruthPolicy::kReject) {
      throw GroundTruthError("critical_cone: u is a ground truth; its cone is {0}");
    }
    cone.coord.assign(n, ConeCoord::kZero);
    return cone;
  }

  const ResidualPattern pattern = residual_pattern(u, ustar, eps_zero);
  for (std::size_t j = 0; j < n; ++j) {
    if (ustar[j] == 0.0) {
      cone.coord[j] = ConeCoord::kZero;
    } else if (pattern.magnitude[j] == Magnitude::kEqual) {
      cone.coord[j] = ConeCoord::kHalfLine;
      cone.half_line_sign[j] = sign_of(u[j]);
    }
  }
  return cone;
}

bool cone_contains(const CriticalCone& cone, std::span<const double> w, double eps_zero) {
  if (w.size() != cone.coord.size()) throw DimensionMismatch("cone_contains: size mismatch");
  for (std::size_t j = 0; j < w.size(); ++j) {
    switch (cone.coord[j]) {
      case ConeCoord::kFree: break;
      case ConeCoord::kZero:
        if (std::abs(w[j]) > eps_zero) return false;
        break;
      case ConeCoord::kHalfLine:
        if (cone.half_line_sign[j] * w[j] > eps_zero) return false;
        break;
    }
  }
  return true;
}

bool cone_membership(std::span<const double> u, std::span<const double> ustar,
                     std::span<const double> w, double eps_zero) {
  require_same_dim(u, w, "cone_membership");
  return cone_contains(critical_cone(u, ustar, eps_zero), w, eps_zero);
}

double sharpness_coefficient(std::span<const double> ustar) {
  double alpha = std::numeric_limits<double>::infinity();
  std::size_t supp = 0;
  for (double v : ustar) {
    if (v == 0.0) continue;
    ++supp;
    alpha = std::min(alpha, std::abs(v));
  }
  if (supp == 0) throw std::invalid_argument("sharpness_coefficient: u* must be nonzero");
  return std::min(alpha, 0.5 * alpha * static_cast<double>(supp));
}

GrowthReport growth_check(std::span<const double> ustar, double radius, std::size_t samples,
                          std::uint64_t seed) {
  require_finite(ustar, "growth_check");
  if (!(radius > 0.0)) throw std::invalid_argument("growth_check: radius must be > 0");
  GrowthReport report;
  report.beta_hat = 0.5 * sharpness_coefficient(ustar);
  report.radius = radius;
  report.samples = samples;

  const double f_star = objective(ustar, ustar);
  std::vector<double> margins(samples);
  parallel_for(samples, [&](std::size_t s) {
    std::mt19937_64 rng = stream_for(seed, s);
    std::uniform_real_distribution<double> box(-radius, radius);
    Vector u(ustar.begin(), ustar.end());
    double l1 = 0.0;
    for (double& v : u) {
      const double step = box(rng);
      v += step;
      l1 += std::abs(step);
    }
    margins[s] = objective(u, ustar) - f_star - report.beta_hat * l1;
  });

  report.worst_margin = samples > 0 ? margins[0] : 0.0;
  for (double m : margins) {
    report.worst_margin = std::min(report.worst_margin, m);
    if (m < -1e-12) ++report.violations;
  }
  return report;
}

}  // namespace l1landscape
