// Copyright 2026 The holderopt Authors
//
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

#ifndef HOLDEROPT_VECTOR_HPP_
#define HOLDEROPT_VECTOR_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace holderopt {

// Dense point or gradient in R^d. Every stored entry is finite; operations
// that would store NaN or infinity throw NumericError, and binary operations
// on vectors of different dimension throw ContractViolation.
class RealVector {
 public:
  RealVector() = default;
  explicit RealVector(std::size_t dim, double fill = 0.0);
  RealVector(std::initializer_list<double> entries);
  explicit RealVector(std::vector<double> entries);
  explicit RealVector(std::span<const double> entries);

  static RealVector zeros(std::size_t dim) { return RealVector(dim); }
  static RealVector unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  double operator[](std::size_t i) const { return entries_[i]; }
  double at(std::size_t i) const;
  void set(std::size_t i, double value);

  std::span<const double> span() const { return entries_; }
  const std::vector<double>& entries() const { return entries_; }
  const double* data() const { return entries_.data(); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  RealVector& operator+=(const RealVector& other);
  RealVector& operator-=(const RealVector& other);
  RealVector& operator*=(double scale);

  bool operator==(const RealVector& other) const = default;

 private:
  std::vector<double> entries_;
};

RealVector operator+(RealVector lhs, const RealVector& rhs);
RealVector operator-(RealVector lhs, const RealVector& rhs);
RealVector operator-(RealVector v);
RealVector operator*(double scale, RealVector v);
RealVector operator*(RealVector v, double scale);
RealVector operator/(RealVector v, double scale);

double inner(const RealVector& p, const RealVector& q);
double norm(const RealVector& p);
double squared_norm(const RealVector& p);
double distance(const RealVector& p, const RealVector& q);
double l1_norm(const RealVector& p);

// a * p + q
RealVector axpy(double a, const RealVector& p, const RealVector& q);

// Throws ContractViolation unless p and q have equal dimension.
void require_same_dim(const RealVector& p, const RealVector& q);

}  // namespace holderopt

#endif  // HOLDEROPT_VECTOR_HPP_
