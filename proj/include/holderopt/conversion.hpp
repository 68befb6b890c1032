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

#ifndef HOLDEROPT_CONVERSION_HPP_
#define HOLDEROPT_CONVERSION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "holderopt/domain.hpp"
#include "holderopt/online_learners.hpp"
#include "holderopt/oracle.hpp"

namespace holderopt {

// How the online learner's optimism M_t is formed inside the conversion.
enum class OptimismRule {
  kNone,   // M_t = 0: plain OGD on the linearized losses
  kProbe,  // M_t = alpha_t g(x_tilde_t), one extra query per round t >= 2
};

using WeightFn = std::function<double(std::size_t)>;

struct ConversionRecord {
  std::size_t round = 0;
  std::size_t queries = 0;  // oracle calls after this round
  double weight = 0.0;      // alpha_t
  double weight_sum = 0.0;  // alpha_{1:t}
  RealVector played;        // x_t
  RealVector average;       // x_bar_t
  RealVector gradient;      // g(x_bar_t)
  std::optional<RealVector> probe;  // x_tilde_t
  double eta = 0.0;
  double accumulator = 0.0;  // A_t
  double value = 0.0;        // objective at x_bar_t
  // |a_{1:t-1}(x_bar_{t-1} - x_bar_t) - a_t(x_bar_t - x_t)| relative to
  // a_{1:t} max(1, |x_bar_{t-1}|, |x_bar_t|, |x_t|); zero in round 1.
  double stabilization_residual = 0.0;
  // Running sums that let weighted_regret work on thinned traces.
  double weighted_loss = 0.0;      // sum_s alpha_s <g(x_bar_s), x_s>
  RealVector weighted_gradient;    // sum_s alpha_s g(x_bar_s)
};

struct ConversionTrace {
  std::vector<ConversionRecord> records;  // thinned by stride, last kept
  std::size_t stride = 1;
  std::size_t rounds = 0;
  std::size_t queries = 0;
  RealVector output;  // x_bar_T
  double output_value = 0.0;
  double weight_sum = 0.0;
  double max_stabilization_residual = 0.0;
  double tuning_lhs = 0.0;
  double tuning_rhs = 0.0;
  bool steps_non_increasing = true;
  double max_infeasibility = 0.0;
};

struct ConversionOptions {
  WeightFn weights = [](std::size_t) { return 1.0; };
  OptimismRule optimism = OptimismRule::kNone;
  std::size_t max_rounds = 0;  // 0: run until the budget cannot fund a round
  std::size_t stride = 1;
};

// Stabilized online-to-batch conversion: the learner plays x_t, the gradient
// is queried at the weighted average x_bar_t, and the learner receives the
// linear loss alpha_t <g(x_bar_t), x>. Stops at the last round the oracle
// budget can pay for in full.
ConversionTrace o2b_run(OptimisticOgd learner, GradientOracle& oracle,
                        const ConversionOptions& options);

struct UniversalConvexOptions {
  std::optional<RealVector> x_init;  // default: domain center
  double floor = kDefaultStepFloor;
  std::size_t stride = 1;
};

// Weights alpha_t = t, probe optimism, adaptive step sizes. Round 1 costs one
// query and every later round two, so a budget of T funds floor((T+1)/2)
// rounds.
ConversionTrace universal_convex_optimize(
    ObjectivePtr objective, const Domain& domain, std::size_t budget,
    const OracleOptions& oracle_options = {},
    const UniversalConvexOptions& options = {});

// AdaGrad-norm averaged OGD: unit weights, no optimism.
ConversionTrace baseline_ogd(ObjectivePtr objective, const Domain& domain,
                             std::size_t budget,
                             const OracleOptions& oracle_options = {},
                             const UniversalConvexOptions& options = {});

// sum_t alpha_t <g(x_bar_t), x_t - comparator>.
double weighted_regret(const ConversionTrace& trace,
                       const RealVector& comparator);

}  // namespace holderopt

#endif  // HOLDEROPT_CONVERSION_HPP_
