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

#ifndef HOLDEROPT_ORACLE_HPP_
#define HOLDEROPT_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

#include "holderopt/objective.hpp"

namespace holderopt {

enum class NoiseMode { kDeterministic, kStochastic };

struct OracleOptions {
  NoiseMode mode = NoiseMode::kDeterministic;
  double sigma = 0.0;  // E|noise|^2 = sigma^2, split evenly over coordinates
  std::uint64_t seed = 0;
};

// Gradient access with a hard query budget. Each gradient call costs one
// query; value calls are free. Owns its RNG, so one oracle per run.
class GradientOracle {
 public:
  GradientOracle(ObjectivePtr objective, std::size_t budget,
                 OracleOptions options = {});

  // Throws BudgetExhausted once queries_used() == budget().
  RealVector gradient(const RealVector& x);
  double value(const RealVector& x) const { return objective_->value(x); }

  const Objective& objective() const { return *objective_; }
  const ObjectivePtr& objective_ptr() const { return objective_; }
  const OracleOptions& options() const { return options_; }
  bool deterministic() const {
    return options_.mode == NoiseMode::kDeterministic || options_.sigma == 0.0;
  }

  std::size_t budget() const { return budget_; }
  std::size_t queries_used() const { return used_; }
  std::size_t remaining() const { return budget_ - used_; }
  bool exhausted() const { return used_ >= budget_; }

 private:
  ObjectivePtr objective_;
  std::size_t budget_;
  OracleOptions options_;
  std::size_t used_ = 0;
  std::mt19937_64 rng_;
  std::normal_distribution<double> gauss_{0.0, 1.0};
};

}  // namespace holderopt

#endif  // HOLDEROPT_ORACLE_HPP_
