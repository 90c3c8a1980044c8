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

#ifndef L1LANDSCAPE_OBJECTIVE_H_
#define L1LANDSCAPE_OBJECTIVE_H_

#include <span>

namespace l1landscape {

// f(u) = 1/2 sum_{i,j} |u_i u_j - u*_i u*_j|.
double objective(std::span<const double> u, std::span<const double> ustar);

// (f(u + t w) - f(u)) / t, t > 0.
double finite_difference_slope(std::span<const double> u, std::span<const double> ustar,
                               std::span<const double> w, double t);

}  // namespace l1landscape

#endif  // L1LANDSCAPE_OBJECTIVE_H_
