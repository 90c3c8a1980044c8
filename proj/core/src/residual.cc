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

#include "l1landscape/residual.h"

#include <cmath>
#include <stdexcept>

#include "l1landscape/linalg.h"

namespace l1landscape {

ResidualPattern residual_pattern(std::span<const double> u, std::span<const double> ustar,
                                 double eps_zero) {
  require_same_dim(u, ustar, "residual_pattern");
  require_finite(u, "residual_pattern");
  require_finite(ustar, "residual_pattern");
  if (!(eps_zero > 0.0)) throw std::invalid_argument("residual_pattern: eps_zero must be > 0");
  const std::size_t n = u.size();
  ResidualPattern p;
  p.n = n;
  p.entry_sign.assign(n * n, EntrySign::kZero);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double r = u[i] * u[j] - ustar[i] * ustar[j];
      EntrySign s = EntrySign::kZero;
      if (r > eps_zero) {
        s = EntrySign::kPos;
      } else if (r < -eps_zero) {
        s = EntrySign::kNeg;
      }
      p.entry_sign[i * n + j] = s;
      p.entry_sign[j * n + i] = s;
    }
  }

  p.magnitude.resize(n);
  p.tag.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double gap = std::abs(u[i]) - std::abs(ustar[i]);
    if (gap > eps_zero) {
      p.magnitude[i] = Magnitude::kGreater;
      p.j_greater.push_back(i);
    } else if (gap < -eps_zero) {
      p.magnitude[i] = Magnitude::kLess;
      p.j_less.push_back(i);
    } else {
      p.magnitude[i] = Magnitude::kEqual;
      p.j_equal.push_back(i);
    }

    if (std::abs(u[i]) <= eps_zero) {
      p.tag[i] = CoordTag::kZero;
    } else if (u[i] * ustar[i] > 0.0) {
      p.tag[i] = CoordTag::kAgree;
    } else {
      p.tag[i] = CoordTag::kDisagree;
    }
  }
  return p;
}

bool is_zero_vector(std::span<const double> u, double eps_zero) {
  for (double v : u) {
    if (std::abs(v) > eps_zero) return false;
  }
  return true;
}

std::vector<std::size_t> support(std::span<const double> ustar) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < ustar.size(); ++i) {
    if (ustar[i] != 0.0) s.push_back(i);
  }
  return s;
}

}  // namespace l1landscape
