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

#include "holderopt/objective.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "holderopt/errors.hpp"

namespace holderopt {

double bregman_divergence(double fx, double fy, const RealVector& grad_y,
                          const RealVector& x, const RealVector& y) {
  const double div = fx - fy - inner(grad_y, x - y);
  if (!std::isfinite(div)) throw NumericError("non-finite Bregman divergence");
  if (div >= 0.0) return div;
  const double tol =
      kBregmanRoundoff * std::max({1.0, std::abs(fx), std::abs(fy)});
  if (div > -tol) return 0.0;
  std::ostringstream msg;
  msg << "negative Bregman divergence " << div
      << " (objective not convex or gradient inconsistent)";
  throw ConvexityViolation(msg.str());
}

double bregman_divergence(const Objective& obj, const RealVector& x,
                          const RealVector& y) {
  require_same_dim(x, y);
  return bregman_divergence(obj.value(x), obj.value(y), obj.gradient(y), x, y);
}

}  // namespace holderopt
