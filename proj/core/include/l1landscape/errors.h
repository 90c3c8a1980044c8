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

#ifndef L1LANDSCAPE_ERRORS_H_
#define L1LANDSCAPE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace l1landscape {

// Raised when two vectors that must share a dimension do not.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation that needs a stationary point was handed a non-stationary one.
class NotStationaryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An operation scoped to spurious stationary points was handed +-u*.
class GroundTruthError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The LP solver hit its pivot cap or lost numerical feasibility.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace l1landscape

#endif  // L1LANDSCAPE_ERRORS_H_
