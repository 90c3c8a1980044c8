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

#ifndef L1LANDSCAPE_LINALG_H_
#define L1LANDSCAPE_LINALG_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace l1landscape {

using Vector = std::vector<double>;

// Dense row-major matrix. Sizes here are desk-scale (n <= a few hundred).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  // y = M x
  Vector apply(std::span<const double> x) const;

  bool is_symmetric(double tol = 0.0) const;
  double max_abs() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm1(std::span<const double> x);
double norm2(std::span<const double> x);
double norm_inf(std::span<const double> x);
double dist2(std::span<const double> a, std::span<const double> b);
double dist_inf(std::span<const double> a, std::span<const double> b);

Vector add(std::span<const double> a, std::span<const double> b);
Vector sub(std::span<const double> a, std::span<const double> b);
Vector scale(double s, std::span<const double> x);
// a + t * b
Vector axpy(std::span<const double> a, double t, std::span<const double> b);
Vector negate(std::span<const double> x);

// Throws DimensionMismatch naming `what` when sizes differ or are zero.
void require_same_dim(std::span<const double> a, std::span<const double> b,
                      std::string_view what);
// Throws std::invalid_argument when the vector is empty or holds non-finite entries.
void require_finite(std::span<const double> x, std::string_view what);

}  // namespace l1landscape

#endif  // L1LANDSCAPE_LINALG_H_
