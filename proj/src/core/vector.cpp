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

#include "holderopt/vector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "holderopt/errors.hpp"

namespace holderopt {

namespace {

void require_finite(double value) {
  if (!std::isfinite(value)) {
    throw NumericError("non-finite vector entry");
  }
}

void require_all_finite(const std::vector<double>& entries) {
  for (double value : entries) require_finite(value);
}

}  // namespace

RealVector::RealVector(std::size_t dim, double fill) : entries_(dim, fill) {
  require_finite(fill);
}

RealVector::RealVector(std::initializer_list<double> entries)
    : entries_(entries) {
  require_all_finite(entries_);
}

RealVector::RealVector(std::vector<double> entries)
    : entries_(std::move(entries)) {
  require_all_finite(entries_);
}

RealVector::RealVector(std::span<const double> entries)
    : entries_(entries.begin(), entries.end()) {
  require_all_finite(entries_);
}

RealVector RealVector::unit(std::size_t dim, std::size_t axis) {
  if (axis >= dim) {
    throw ContractViolation("unit vector axis out of range");
  }
  RealVector out(dim);
  out.entries_[axis] = 1.0;
  return out;
}

double RealVector::at(std::size_t i) const {
  if (i >= entries_.size()) throw ContractViolation("index out of range");
  return entries_[i];
}

void RealVector::set(std::size_t i, double value) {
  if (i >= entries_.size()) throw ContractViolation("index out of range");
  require_finite(value);
  entries_[i] = value;
}

RealVector& RealVector::operator+=(const RealVector& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] += other.entries_[i];
  }
  require_all_finite(entries_);
  return *this;
}

RealVector& RealVector::operator-=(const RealVector& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] -= other.entries_[i];
  }
  require_all_finite(entries_);
  return *this;
}

RealVector& RealVector::operator*=(double scale) {
  for (double& value : entries_) value *= scale;
  require_all_finite(entries_);
  return *this;
}

RealVector operator+(RealVector lhs, const RealVector& rhs) {
  lhs += rhs;
  return lhs;
}

RealVector operator-(RealVector lhs, const RealVector& rhs) {
  lhs -= rhs;
  return lhs;
}

RealVector operator-(RealVector v) {
  v *= -1.0;
  return v;
}

RealVector operator*(double scale, RealVector v) {
  v *= scale;
  return v;
}

RealVector operator*(RealVector v, double scale) {
  v *= scale;
  return v;
}

RealVector operator/(RealVector v, double scale) {
  if (scale == 0.0) throw NumericError("division of vector by zero");
  v *= 1.0 / scale;
  return v;
}

void require_same_dim(const RealVector& p, const RealVector& q) {
  if (p.dim() != q.dim()) {
    throw ContractViolation("dimension mismatch: " + std::to_string(p.dim()) +
                            " vs " + std::to_string(q.dim()));
  }
}

double inner(const RealVector& p, const RealVector& q) {
  require_same_dim(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) sum += p[i] * q[i];
  return sum;
}

double squared_norm(const RealVector& p) { return inner(p, p); }

double norm(const RealVector& p) {
  // hypot-style scaling keeps large entries from overflowing the square.
  double scale = 0.0;
  for (double v : p) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (double v : p) sum += (v / scale) * (v / scale);
  return scale * std::sqrt(sum);
}

double distance(const RealVector& p, const RealVector& q) {
  require_same_dim(p, q);
  double scale = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    scale = std::max(scale, std::abs(p[i] - q[i]));
  }
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double d = (p[i] - q[i]) / scale;
    sum += d * d;
  }
  return scale * std::sqrt(sum);
}

double l1_norm(const RealVector& p) {
  double sum = 0.0;
  for (double v : p) sum += std::abs(v);
  return sum;
}

RealVector axpy(double a, const RealVector& p, const RealVector& q) {
  require_same_dim(p, q);
  std::vector<double> out(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) out[i] = a * p[i] + q[i];
  return RealVector(std::move(out));
}

}  // namespace holderopt
