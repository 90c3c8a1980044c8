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

#ifndef L1LANDSCAPE_RESIDUAL_H_
#define L1LANDSCAPE_RESIDUAL_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "l1landscape/tolerances.h"

namespace l1landscape {

enum class EntrySign : std::int8_t { kNeg = -1, kZero = 0, kPos = 1 };

// Comparison of |u_i| against |u*_i|.
enum class Magnitude : std::uint8_t { kGreater, kEqual, kLess };

// Sign relation between u_i and u*_i: agree (~), disagree (!~), or u_i = 0.
// A nonzero u_i against u*_i = 0 is tagged kDisagree.
enum class CoordTag : std::uint8_t { kAgree, kDisagree, kZero };

// Combinatorial pattern of the residual uu^T - u*u*^T together with the
// per-coordinate index sets J_>, J_=, J_< and their sign refinements.
struct ResidualPattern {
  std::size_t n = 0;
  std::vector<EntrySign> entry_sign;  // n x n, row-major, symmetric
  std::vector<Magnitude> magnitude;   // per coordinate
  std::vector<CoordTag> tag;          // per coordinate
  std::vector<std::size_t> j_greater;
  std::vector<std::size_t> j_equal;
  std::vector<std::size_t> j_less;

  EntrySign sign(std::size_t i, std::size_t j) const { return entry_sign[i * n + j]; }
  bool is_zero(std::size_t i, std::size_t j) const {
    return sign(i, j) == EntrySign::kZero;
  }
};

ResidualPattern residual_pattern(std::span<const double> u, std::span<const double> ustar,
                                 double eps_zero = kDefaultEpsZero);

// True when every entry of u is within eps_zero of zero.
bool is_zero_vector(std::span<const double> u, double eps_zero = 0.0);

// supp(u*) = {i : u*_i != 0}; exact zero test.
std::vector<std::size_t> support(std::span<const double> ustar);

}  // namespace l1landscape

#endif  // L1LANDSCAPE_RESIDUAL_H_
