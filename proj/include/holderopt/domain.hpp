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

#ifndef HOLDEROPT_DOMAIN_HPP_
#define HOLDEROPT_DOMAIN_HPP_

#include <cstddef>
#include <random>
#include <string_view>

#include "holderopt/vector.hpp"

namespace holderopt {

enum class DomainKind { kBall, kBox, kAllSpace };

std::string_view to_string(DomainKind kind);

// Closed convex feasible set with exact Euclidean projection. Immutable once
// built; copies are cheap enough to pass by value.
class Domain {
 public:
  static Domain ball(RealVector center, double radius);
  static Domain box(RealVector lower, RealVector upper);
  static Domain all_space(std::size_t dim);

  DomainKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }

  // ball: 2 * radius; box: |upper - lower|; all_space: +inf.
  double diameter() const { return diameter_; }
  bool bounded() const { return kind_ != DomainKind::kAllSpace; }

  // Ball accessors (center is also the box midpoint).
  const RealVector& center() const { return center_; }
  double radius() const { return radius_; }
  const RealVector& lower() const { return lower_; }
  const RealVector& upper() const { return upper_; }

  RealVector project(const RealVector& p) const;

  // Euclidean distance from p to the set.
  double distance_to(const RealVector& p) const;
  bool contains(const RealVector& p, double tol = 0.0) const;

 private:
  Domain() = default;

  DomainKind kind_ = DomainKind::kAllSpace;
  std::size_t dim_ = 0;
  double diameter_ = 0.0;
  RealVector center_;
  double radius_ = 0.0;
  RealVector lower_;
  RealVector upper_;
};

RealVector project(const Domain& domain, const RealVector& p);

// Uniform sample from a bounded domain. For all_space the sample is uniform
// in the ball of radius `fallback_radius` around `anchor`.
RealVector sample_point(const Domain& domain, std::mt19937_64& rng,
                        const RealVector& anchor, double fallback_radius);

}  // namespace holderopt

#endif  // HOLDEROPT_DOMAIN_HPP_
