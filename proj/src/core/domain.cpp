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

#include "holderopt/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "holderopt/errors.hpp"

namespace holderopt {

std::string_view to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::kBall:
      return "ball";
    case DomainKind::kBox:
      return "box";
    case DomainKind::kAllSpace:
      return "all_space";
  }
  return "unknown";
}

Domain Domain::ball(RealVector center, double radius) {
  if (center.empty()) throw ContractViolation("ball needs dimension >= 1");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw ContractViolation("ball radius must be positive and finite");
  }
  Domain d;
  d.kind_ = DomainKind::kBall;
  d.dim_ = center.dim();
  d.center_ = std::move(center);
  d.radius_ = radius;
  d.diameter_ = 2.0 * radius;
  return d;
}

Domain Domain::box(RealVector lower, RealVector upper) {
  require_same_dim(lower, upper);
  if (lower.empty()) throw ContractViolation("box needs dimension >= 1");
  for (std::size_t i = 0; i < lower.dim(); ++i) {
    if (lower[i] > upper[i]) {
      throw ContractViolation("box requires lower <= upper componentwise");
    }
  }
  Domain d;
  d.kind_ = DomainKind::kBox;
  d.dim_ = lower.dim();
  d.diameter_ = distance(upper, lower);
  d.center_ = 0.5 * (lower + upper);
  d.lower_ = std::move(lower);
  d.upper_ = std::move(upper);
  return d;
}

Domain Domain::all_space(std::size_t dim) {
  if (dim == 0) throw ContractViolation("all_space needs dimension >= 1");
  Domain d;
  d.kind_ = DomainKind::kAllSpace;
  d.dim_ = dim;
  d.center_ = RealVector(dim);
  d.diameter_ = std::numeric_limits<double>::infinity();
  return d;
}

RealVector Domain::project(const RealVector& p) const {
  if (p.dim() != dim_) {
    throw ContractViolation("projection dimension mismatch");
  }
  switch (kind_) {
    case DomainKind::kAllSpace:
      return p;
    case DomainKind::kBox: {
      std::vector<double> out(dim_);
      for (std::size_t i = 0; i < dim_; ++i) {
        out[i] = std::clamp(p[i], lower_[i], upper_[i]);
      }
      return RealVector(std::move(out));
    }
    case DomainKind::kBall: {
      const RealVector offset = p - center_;
      const double dist = norm(offset);
      if (dist <= radius_) return p;
      // Shrink the factor until the rounded result lies inside, so a second
      // projection is the identity bit for bit.
      double factor = radius_ / dist;
      RealVector q = axpy(factor, offset, center_);
      while (distance(q, center_) > radius_) {
        factor = std::nextafter(factor, 0.0);
        q = axpy(factor, offset, center_);
      }
      return q;
    }
  }
  return p;
}

double Domain::distance_to(const RealVector& p) const {
  return distance(project(p), p);
}

bool Domain::contains(const RealVector& p, double tol) const {
  return distance_to(p) <= tol;
}

RealVector project(const Domain& domain, const RealVector& p) {
  return domain.project(p);
}

namespace {

RealVector sample_in_ball(std::mt19937_64& rng, const RealVector& center,
                          double radius) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const std::size_t d = center.dim();
  std::vector<double> dir(d);
  double n = 0.0;
  while (n == 0.0) {
    for (double& v : dir) v = gauss(rng);
    n = 0.0;
    for (double v : dir) n += v * v;
    n = std::sqrt(n);
  }
  const double r = radius * std::pow(unif(rng), 1.0 / static_cast<double>(d));
  std::vector<double> out(d);
  for (std::size_t i = 0; i < d; ++i) out[i] = center[i] + r * dir[i] / n;
  return RealVector(std::move(out));
}

}  // namespace

RealVector sample_point(const Domain& domain, std::mt19937_64& rng,
                        const RealVector& anchor, double fallback_radius) {
  switch (domain.kind()) {
    case DomainKind::kBall:
      return domain.project(
          sample_in_ball(rng, domain.center(), domain.radius()));
    case DomainKind::kBox: {
      std::vector<double> out(domain.dim());
      for (std::size_t i = 0; i < domain.dim(); ++i) {
        std::uniform_real_distribution<double> unif(domain.lower()[i],
                                                    domain.upper()[i]);
        out[i] = domain.lower()[i] == domain.upper()[i] ? domain.lower()[i]
                                                        : unif(rng);
      }
      return RealVector(std::move(out));
    }
    case DomainKind::kAllSpace:
      require_same_dim(anchor, domain.center());
      return sample_in_ball(rng, anchor, fallback_radius);
  }
  return anchor;
}

}  // namespace holderopt
