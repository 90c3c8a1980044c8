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

#include "l1landscape/tilting.h"

#include <algorithm>
#include <limits>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "l1landscape/errors.h"
#include "l1landscape/format.h"
#include "l1landscape/subdifferential.h"

namespace l1landscape::tilting {

SmoothValue eval_ex41(double x) {
  if (x <= -2.0) return {0.5, 0.0};
  if (x <= -1.0) return {-0.5 * (x + 2.0) * (x + 2.0) + 0.5, -x - 2.0};
  if (x <= 1.0) return {0.5 * x * x - 0.5, x};
  if (x <= 2.0) return {-0.5 * (x - 2.0) * (x - 2.0) + 0.5, -x + 2.0};
  return {0.5, 0.0};
}

// Branch boundaries follow the piecewise definition literally: x = 0 takes
// the x <= 0 branch, and floor(x) = x at integers.
KinkedValue eval_ex42(double x) {
  KinkedValue out{};
  if (x <= 0.0) {
    const double fl = std::floor(-x);
    const double s = x + fl + 1.0;
    out.value = -0.5 * s * s + 0.5 + 0.5 * fl;
  } else {
    const double fl = std::floor(x);
    const double s = x - fl - 1.0;
    out.value = -0.5 * s * s + 0.5 + 0.5 * fl;
  }

  const bool integer = x == std::floor(x);
  if (x == 0.0) {
    out.subdifferential = {-1.0, 1.0};
  } else if (x < 0.0) {
    out.subdifferential = integer ? Interval{-1.0, 0.0}
                                  : Interval{-(x - std::floor(x)), -(x - std::floor(x))};
  } else {
    const double v = -(x - std::floor(x)) + 1.0;
    out.subdifferential = integer ? Interval{0.0, 1.0} : Interval{v, v};
  }
  return out;
}

std::string_view to_string(ScalarFn fn) { return fn == ScalarFn::kEx41 ? "ex41" : "ex42"; }

ScalarFn parse_scalar_fn(std::string_view s) {
  if (s == "ex41") return ScalarFn::kEx41;
  if (s == "ex42") return ScalarFn::kEx42;
  throw std::invalid_argument("unknown function '" + std::string(s) + "' (expected ex41 or ex42)");
}

Interval scalar_subdifferential(ScalarFn fn, double x) {
  if (fn == ScalarFn::kEx41) {
    const double d = eval_ex41(x).derivative;
    return {d, d};
  }
  return eval_ex42(x).subdifferential;
}

double scalar_value(ScalarFn fn, double x) {
  return fn == ScalarFn::kEx41 ? eval_ex41(x).value : eval_ex42(x).value;
}

double tilted_value(ScalarFn fn, double x, double a) { return scalar_value(fn, x) - a * x; }

namespace {

SharpnessCertificate certify_intervals(std::vector<Interval> tilted) {
  SharpnessCertificate cert;
  cert.certified = !tilted.empty();
  double modulus = std::numeric_limits<double>::infinity();
  for (const Interval& iv : tilted) {
    if (!(iv.lo < 0.0 && iv.hi > 0.0)) cert.certified = false;
    modulus = std::min({modulus, -iv.lo, iv.hi});
  }
  cert.modulus = cert.certified ? modulus : 0.0;
  cert.tilted_subdifferential = std::move(tilted);
  return cert;
}

}  // namespace

SharpnessCertificate certify_sharp_local_min_1d(ScalarFn fn, double x0, double a) {
  const Interval g = scalar_subdifferential(fn, x0);
  return certify_intervals({Interval{g.lo - a, g.hi - a}});
}

SharpnessCertificate certify_sharp_local_min_tilted_f(std::span<const double> ustar,
                                                      std::span<const double> u0,
                                                      std::span<const double> a) {
  if (ustar.size() != 2 || u0.size() != 2 || a.size() != 2) {
    throw DimensionMismatch("certify_sharp_local_min_tilted_f: expects two-dimensional inputs");
  }
  const bool instance = ustar[0] == 1.0 && ustar[1] == 1.0 &&
                        ((u0[0] == -1.0 && u0[1] == 1.0) || (u0[0] == 1.0 && u0[1] == -1.0));
  if (!instance) {
    throw std::invalid_argument(
        "certify_sharp_local_min_tilted_f: only u* = (1,1), u0 = +-(-1,1) is supported");
  }

  // Each free entry must feed a single coordinate for df(u0) to be a box.
  const SubdifferentialModel model = SubdifferentialModel::Build(u0, ustar);
  const Matrix a_free = model.free_map();
  const Vector center = model.fixed_part();
  std::vector<Interval> boxes(2);
  for (std::size_t i = 0; i < 2; ++i) boxes[i] = {center[i], center[i]};
  for (std::size_t p = 0; p < a_free.cols(); ++p) {
    std::size_t touched = 0;
    for (std::size_t r = 0; r < 2; ++r) {
      const double w = std::abs(a_free(r, p));
      if (w == 0.0) continue;
      ++touched;
      boxes[r].lo -= w;
      boxes[r].hi += w;
    }
    if (touched > 1) {
      throw std::logic_error("certify_sharp_local_min_tilted_f: subdifferential is not a box");
    }
  }
  for (std::size_t i = 0; i < 2; ++i) {
    boxes[i].lo -= a[i];
    boxes[i].hi -= a[i];
  }
  return certify_intervals(std::move(boxes));
}

DivergenceReport tilt_divergence_probe_ex41(double a, double x0, const StepSchedule& schedule,
                                            std::size_t max_iters, double threshold) {
  schedule.validate();
  DivergenceReport report;
  report.a = a;
  report.x0 = x0;
  report.threshold = threshold;
  double x = x0;
  std::size_t k = 0;
  while (k < max_iters && std::abs(x) <= threshold) {
    ++k;
    x -= schedule.step(k) * (eval_ex41(x).derivative - a);
  }
  report.last_iterate = x;
  report.iterations = k;
  report.escaped = std::abs(x) > threshold;
  return report;
}

std::string tilt_samples_csv(ScalarFn fn, double a, double xmin, double xmax, std::size_t count) {
  if (count == 0) throw std::invalid_argument("tilt_samples_csv: count must be >= 1");
  std::ostringstream os;
  os << "x,g,h_a\r\n";
  for (std::size_t i = 0; i < count; ++i) {
    const double x = count == 1 ? xmin
                                : xmin + (xmax - xmin) * static_cast<double>(i) /
                                             static_cast<double>(count - 1);
    os << format_double(x) << ',' << format_double(scalar_value(fn, x)) << ','
       << format_double(tilted_value(fn, x, a)) << "\r\n";
  }
  return os.str();
}

}  // namespace l1landscape::tilting
