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

#ifndef L1LANDSCAPE_FORMAT_H_
#define L1LANDSCAPE_FORMAT_H_

#include <string>

namespace l1landscape {

// Shortest-safe text form of a double: 17 significant digits, '.' decimal
// separator, independent of the global locale. Non-finite values print as
// "inf", "-inf" or "nan".
std::string format_double(double v);

}  // namespace l1landscape

#endif  // L1LANDSCAPE_FORMAT_H_
