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

#ifndef L1LANDSCAPE_SUBDIFFERENTIAL_H_
#define L1LANDSCAPE_SUBDIFFERENTIAL_H_

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "l1landscape/linalg.h"
#include "l1landscape/residual.h"
#include "l1landscape/tolerances.h"

namespace l1landscape {

// Residual entry with a nonzero sign; stored once per unordered pair, i <= j.
struct FixedEntry {
  std::size_t i;
  std::size_t j;
  double sign;  // +1 or -1
};

// Residual entry classified zero: Z_ij = Z_ji ranges over [-1, 1]; i <= j.
struct FreePair {
  std::size_t i;
  std::size_t j;
};

// The set of subgradients of f at u,
//   {Z u : Z symmetric, Z_ij in Sign((uu^T - u*u*^T)_ij)},
// split into fixed sign entries and free box entries. Every unordered pair
// {i, j} (including i = j) appears exactly once across the two lists.
class SubdifferentialModel {
 public:
  static SubdifferentialModel Build(std::span<const double> u, std::span<const double> ustar,
                                    double eps_zero = kDefaultEpsZero);
  static SubdifferentialModel FromPattern(const ResidualPattern& pattern,
                                          std::span<const double> u);

  std::size_t dim() const { return base_point_.size(); }
  const Vector& base_point() const { return base_point_; }
  const std::vector<FixedEntry>& fixed_entries() const { return fixed_; }
  const std::vector<FreePair>& free_pairs() const { return free_; }

  // Z with the fixed signs and free pair p set to z[p].
  Matrix matrix(std::span<const double> z) const;
  // Z_fixed u, where Z_fixed has every free entry at zero (the midpoint selection).
  Vector fixed_part() const;
  // n x F matrix A with Z u = fixed_part() + A z.
  Matrix free_map() const;
  // Z symmetric and inside the sign boxes, entrywise within tol.
  bool contains_matrix(const Matrix& z, double tol) const;

  // Smallest ||g - Z u||_inf over admissible Z, computed by LP. Zero (up to
  // eps_lp) iff g is a subgradient.
  double membership_gap(std::span<const double> g, double eps_lp = kDefaultEpsLp) const;

 private:
  Vector base_point_;
  std::vector<FixedEntry> fixed_;
  std::vector<FreePair> free_;
};

// Selection rules for a single subgradient.
struct MidpointSelection {};
// Free entries take -Sign(u*_i u*_j); on the spurious polytope this is the
// stationarity witness, so every polytope point becomes a fixed point.
struct AntiGroundTruthSelection {};
// Caller-supplied symmetric S; must respect the sign boxes.
struct CustomSelection {
  Matrix s;
};
using SelectionRule = std::variant<MidpointSelection, AntiGroundTruthSelection, CustomSelection>;

// Returns sym(S) u for the selected S. Throws std::invalid_argument when a
// custom S is not symmetric or leaves the sign boxes.
Vector subgradient_select(std::span<const double> u, std::span<const double> ustar,
                          const SelectionRule& rule = MidpointSelection{},
                          double eps_zero = kDefaultEpsZero);

// The matrix S picked by `rule` (before multiplication by u).
Matrix selection_matrix(const SubdifferentialModel& model, std::span<const double> ustar,
                        const SelectionRule& rule, double eps_zero = kDefaultEpsZero);

}  // namespace l1landscape

#endif  // L1LANDSCAPE_SUBDIFFERENTIAL_H_
