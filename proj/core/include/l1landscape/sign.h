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

#ifndef L1LANDSCAPE_SIGN_H_
#define L1LANDSCAPE_SIGN_H_

#include <ostream>

namespace l1landscape {

// Set-valued sign: Sign(x) = {-1} for x < 0, {+1} for x > 0 and the whole
// interval [-1, 1] at x = 0. Represented by its endpoints.
class SignSet {
 public:
  static SignSet Of(double x, double eps_zero = 0.0);
  static SignSet Minus() { return SignSet(-1.0, -1.0); }
  static SignSet Plus() { return SignSet(1.0, 1.0); }
  static SignSet Interval() { return SignSet(-1.0, 1.0); }

  double lower() const { return lo_; }
  double upper() const { return hi_; }
  bool is_singleton() const { return lo_ == hi_; }
  bool contains(double v, double tol = 0.0) const {
    return v >= lo_ - tol && v <= hi_ + tol;
  }
  // Center of the set; the midpoint selection used for Sign(0) is 0.
  double midpoint() const { return 0.5 * (lo_ + hi_); }

  // Elementwise product {a b : a in A, b in B}; closed on this family.
  friend SignSet operator*(const SignSet& a, const SignSet& b);
  friend SignSet operator-(const SignSet& a) { return SignSet(-a.hi_, -a.lo_); }
  friend bool operator==(const SignSet&, const SignSet&) = default;
  friend std::ostream& operator<<(std::ostream& os, const SignSet& s);

 private:
  SignSet(double lo, double hi) : lo_(lo), hi_(hi) {}
  double lo_;
  double hi_;
};

// Single-valued sign with sign(0) = 0.
inline double sign_of(double x, double eps_zero = 0.0) {
  if (x > eps_zero) return 1.0;
  if (x < -eps_zero) return -1.0;
  return 0.0;
}

}  // namespace l1landscape

#endif  // L1LANDSCAPE_SIGN_H_
