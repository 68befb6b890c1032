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

#include "holderopt/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "holderopt/errors.hpp"

namespace holderopt {

GradientOracle::GradientOracle(ObjectivePtr objective, std::size_t budget,
                               OracleOptions options)
    : objective_(std::move(objective)),
      budget_(budget),
      options_(options),
      rng_(options.seed) {
  if (!objective_) throw ContractViolation("oracle needs an objective");
  if (budget_ == 0) throw ContractViolation("oracle budget must be positive");
  if (!(options_.sigma >= 0.0) || !std::isfinite(options_.sigma)) {
    throw ContractViolation("oracle sigma must be finite and >= 0");
  }
}

RealVector GradientOracle::gradient(const RealVector& x) {
  if (used_ >= budget_) {
    throw BudgetExhausted("gradient budget of " + std::to_string(budget_) +
                          " queries exhausted");
  }
  RealVector g = objective_->gradient(x);
  ++used_;
  if (options_.mode == NoiseMode::kStochastic && options_.sigma > 0.0) {
    const double per_coord =
        options_.sigma / std::sqrt(static_cast<double>(g.dim()));
    std::vector<double> noisy(g.begin(), g.end());
    for (double& v : noisy) v += per_coord * gauss_(rng_);
    return RealVector(std::move(noisy));
  }
  return g;
}

}  // namespace holderopt
