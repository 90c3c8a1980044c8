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

#include "l1landscape/sign.h"

#include <algorithm>

namespace l1landscape {

SignSet SignSet::Of(double x, double eps_zero) {
  if (x > eps_zero) return Plus();
  if (x < -eps_zero) return Minus();
  return Interval();
}

SignSet operator*(const SignSet& a, const SignSet& b) {
  const double p[] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  return SignSet(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

std::ostream& operator<<(std::ostream& os, const SignSet& s) {
  if (s.is_singleton()) return os << '{' << s.lower() << '}';
  return os << '[' << s.lower() << ", " << s.upper() << ']';
}

}  // namespace l1landscape
