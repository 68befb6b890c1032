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

#ifndef HOLDEROPT_OBJECTIVE_HPP_
#define HOLDEROPT_OBJECTIVE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>

#include "holderopt/vector.hpp"

namespace holderopt {

// Curvature facts certified for an objective. Algorithms never read these
// (they must stay oblivious to the constants); verification suites do.
struct CurvatureInfo {
  double strong_convexity = 0.0;  // lambda
  double smoothness = 0.0;        // L, +inf when not smooth
  std::optional<double> holder_exponent;  // nu in [0, 1]
  std::optional<double> holder_constant;  // L_nu
  std::optional<RealVector> optimum_point;
  std::optional<double> optimum_value;
};

class Objective {
 public:
  virtual ~Objective() = default;

  virtual std::string_view name() const = 0;
  virtual std::size_t dim() const = 0;
  virtual double value(const RealVector& x) const = 0;
  // Gradient, or a fixed subgradient selection on non-differentiable sets.
  virtual RealVector gradient(const RealVector& x) const = 0;

  const CurvatureInfo& info() const { return info_; }

 protected:
  explicit Objective(CurvatureInfo info) : info_(std::move(info)) {}

 private:
  CurvatureInfo info_;
};

using ObjectivePtr = std::shared_ptr<const Objective>;

// Absolute floor below which a negative divergence is treated as round-off.
inline constexpr double kBregmanRoundoff = 1e-12;

// D(x, y) = f(x) - f(y) - <grad f(y), x - y>. Negative values within
// kBregmanRoundoff * max(1, |f(x)|, |f(y)|) are clamped to zero; anything
// more negative throws ConvexityViolation.
double bregman_divergence(const Objective& obj, const RealVector& x,
                          const RealVector& y);

// Same, with the values and gradient at y already known.
double bregman_divergence(double fx, double fy, const RealVector& grad_y,
                          const RealVector& x, const RealVector& y);

}  // namespace holderopt

#endif  // HOLDEROPT_OBJECTIVE_HPP_
