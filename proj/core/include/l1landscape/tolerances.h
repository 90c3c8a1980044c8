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

#ifndef L1LANDSCAPE_TOLERANCES_H_
#define L1LANDSCAPE_TOLERANCES_H_

namespace l1landscape {

inline constexpr double kDefaultEpsZero = 1e-9;
inline constexpr double kDefaultEpsLp = 1e-9;
inline constexpr double kDefaultEpsDir = 1e-9;

struct Tolerances {
  // Residual entries with |r_ij| <= eps_zero are treated as zero; the same
  // threshold decides |u_i| == |u*_i| and u == +-u*.
  double eps_zero = kDefaultEpsZero;
  // Feasibility / optimality threshold handed to the LP solver.
  double eps_lp = kDefaultEpsLp;
  // "Directional derivative equals zero" threshold.
  double eps_dir = kDefaultEpsDir;
};

}  // namespace l1landscape

#endif  // L1LANDSCAPE_TOLERANCES_H_
