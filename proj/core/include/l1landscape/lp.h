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

#ifndef L1LANDSCAPE_LP_H_
#define L1LANDSCAPE_LP_H_

#include <cstddef>
#include <span>
#include <string_view>

#include "l1landscape/linalg.h"
#include "l1landscape/tolerances.h"

namespace l1landscape::lp {

// maximize c^T x  subject to  A x = b,  lower <= x <= upper.
// All bounds finite.
struct BoxEqLP {
  Vector lower;
  Vector upper;
  Matrix eq_matrix;  // m x k; m may be zero
  Vector eq_rhs;     // m
  Vector objective;  // k

  std::size_t num_vars() const { return lower.size(); }
  std::size_t num_rows() const { return eq_rhs.size(); }
  // Throws std::invalid_argument on shape mismatch, lower > upper, or NaN/inf.
  void validate() const;
};

enum class Status { kOptimal, kInfeasible, kNumericalFailure };
std::string_view to_string(Status s);

struct LPResult {
  Status status = Status::kNumericalFailure;
  double value = 0.0;
  Vector solution;
  // ||A x - b||_inf at the returned solution.
  double residual_norm = 0.0;
  std::size_t pivots = 0;
};

// Bounded-variable primal simplex (two-phase, dense tableau, Bland's rule).
// Deterministic for identical inputs. Reports kNumericalFailure after
// 10 (k + m)^2 pivots or if the final point violates the data by more than
// eps_lp (relative to the data scale).
LPResult solve(const BoxEqLP& lp, double eps_lp = kDefaultEpsLp);

struct MinNormResult {
  Status status = Status::kNumericalFailure;
  double value = 0.0;  // min ||A x||_inf
  Vector x;
};

// min { ||A x||_inf : lower <= x <= upper } via an epigraph variable t and
// two slack blocks: A x - t + p = 0, A x + t - q = 0, p, q >= 0. A fixed
// coordinate (lower = upper) acts as an affine offset column.
MinNormResult feasibility_min_infinity_norm(std::span<const double> lower,
                                            std::span<const double> upper,
                                            const Matrix& eq_matrix,
                                            double eps_lp = kDefaultEpsLp);

}  // namespace l1landscape::lp

#endif  // L1LANDSCAPE_LP_H_
