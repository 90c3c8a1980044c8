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

#ifndef L1LANDSCAPE_TILTING_H_
#define L1LANDSCAPE_TILTING_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "l1landscape/dynamics.h"
#include "l1landscape/linalg.h"

namespace l1landscape::tilting {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double v) const { return v >= lo && v <= hi; }
};

// g_1: C^1 with a 1-Lipschitz derivative, unique minimizer 0, flat (0.5)
// for |x| >= 2.
struct SmoothValue {
  double value;
  double derivative;
};
SmoothValue eval_ex41(double x);

// g_2: sawtooth of concave quadratics with kinks at the integers, unique
// minimizer 0. Returns the value and the Frechet subdifferential.
struct KinkedValue {
  double value;
  Interval subdifferential;
};
KinkedValue eval_ex42(double x);

enum class ScalarFn { kEx41, kEx42 };
std::string_view to_string(ScalarFn fn);
ScalarFn parse_scalar_fn(std::string_view s);

// Subdifferential of g (singleton for kEx41).
Interval scalar_subdifferential(ScalarFn fn, double x);
double scalar_value(ScalarFn fn, double x);
// h_a(x) = g(x) - a x
double tilted_value(ScalarFn fn, double x, double a);

struct SharpnessCertificate {
  bool certified = false;
  double modulus = 0.0;
  // Subdifferential of the tilted function at the point; one interval per coordinate.
  std::vector<Interval> tilted_subdifferential;
};

// x0 is a sharp local minimizer of h_a when 0 lies strictly inside
// dg(x0) - a = [lo, hi]; then dh_a(x0)(d) = max(lo d, hi d) >= min(-lo, hi)|d|.
SharpnessCertificate certify_sharp_local_min_1d(ScalarFn fn, double x0, double a);

// h_a(u) = f(u) - a^T u at u0 = +-(-1, 1) with u* = (1, 1): the subdifferential
// of f at u0 is a product of intervals, so u0 is a sharp local minimizer iff 0
// is interior to every coordinate interval minus a_i. Throws
// std::invalid_argument for any other (u*, u0).
SharpnessCertificate certify_sharp_local_min_tilted_f(std::span<const double> ustar,
                                                      std::span<const double> u0,
                                                      std::span<const double> a);

struct DivergenceReport {
  double a = 0.0;
  double x0 = 0.0;
  double last_iterate = 0.0;
  std::size_t iterations = 0;
  bool escaped = false;   // |x_K| > threshold
  double threshold = 1e3;
};

// Gradient descent x_{k+1} = x_k - alpha_{k+1} h_a'(x_k) on h_a = g_1 - a x.
// Stops once |x| exceeds the threshold.
DivergenceReport tilt_divergence_probe_ex41(double a, double x0, const StepSchedule& schedule,
                                            std::size_t max_iters, double threshold = 1e3);

// CSV "x,g,h_a" sampled at `count` evenly spaced points of [xmin, xmax].
std::string tilt_samples_csv(ScalarFn fn, double a, double xmin, double xmax, std::size_t count);

}  // namespace l1landscape::tilting

#endif  // L1LANDSCAPE_TILTING_H_
