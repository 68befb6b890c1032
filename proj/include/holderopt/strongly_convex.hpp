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

#ifndef HOLDEROPT_STRONGLY_CONVEX_HPP_
#define HOLDEROPT_STRONGLY_CONVEX_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "holderopt/domain.hpp"
#include "holderopt/objective.hpp"
#include "holderopt/oracle.hpp"

namespace holderopt {

// Relative Bregman size below which the smoothness estimate is skipped and
// the guess is accepted.
inline constexpr double kDivergenceFloor = 1e-14;

// Relative slack of the acceptance test beta^2 4 L_t <= lambda (1 + slack).
inline constexpr double kCheckSlack = 1e-9;

// ||grad(a) - grad(b)||^2 / (2 D(a, b)); nullopt when D(a, b) is within
// round-off of zero. Throws ConvexityViolation on a negative divergence.
std::optional<double> empirical_smoothness(const Objective& objective,
                                           const RealVector& a,
                                           const RealVector& b);

// Same, from values and gradients already at hand.
std::optional<double> empirical_smoothness(double value_a, double value_b,
                                           const RealVector& grad_a,
                                           const RealVector& grad_b,
                                           const RealVector& a,
                                           const RealVector& b);

struct GuessCheckOptions {
  double lambda = 1.0;
  double beta_initial = 1.0;
  double beta_floor = 0.0;
  std::optional<RealVector> x_init;  // default: domain center
};

// One row per gradient query after the initial one.
struct GuessCheckRecord {
  std::size_t query = 0;      // c after the query
  std::size_t iteration = 0;  // accepted-iteration index t after the pass
  double beta = 0.0;          // guess tested by this pass
  bool accepted = false;
  bool by_floor = false;      // accepted because beta equals the floor
  bool sentinel = false;      // divergence too small to estimate smoothness
  std::optional<double> smoothness;
  double eta = 0.0;             // 1 / (lambda alpha_{1:t}) of the step taken
  double log_weight_sum = 0.0;  // log alpha_{1:t} after the pass
  double value = 0.0;           // objective at the last accepted average
  double stabilization_residual = 0.0;
};

struct GuessCheckResult {
  RealVector output;  // x_bar_tau
  double output_value = 0.0;
  std::size_t iterations = 1;  // tau
  std::size_t queries = 0;
  std::size_t rejections = 0;
  double lambda = 0.0;
  double beta_floor = 0.0;
  std::vector<GuessCheckRecord> records;
  std::vector<double> accepted_betas;    // beta_2 .. beta_tau
  std::vector<double> log_weight_sums;   // log alpha_{1:t}, t = 1 .. tau
  double max_stabilization_residual = 0.0;
  // Rejected guesses outnumber accepted ones: the smoothness check kept
  // failing, as it does on nonsmooth objectives without a floor.
  bool nonconvergent = false;
};

// Guess-and-check accelerated method for lambda-strongly convex objectives.
// The oracle must be deterministic; its budget is T. Weights are carried as
// ratios alpha_t / alpha_{1:t} so that long runs do not overflow.
GuessCheckResult guess_check_run(GradientOracle& oracle, const Domain& domain,
                                 const GuessCheckOptions& options);

GuessCheckResult guess_check_run(ObjectivePtr objective, const Domain& domain,
                                 std::size_t budget,
                                 const GuessCheckOptions& options);

// beta_1 = 1, floor exp(ln T / T) - 1.
double thm4_beta_floor(std::size_t budget);

GuessCheckResult run_thm4(ObjectivePtr objective, const Domain& domain,
                          double lambda, std::size_t budget,
                          std::optional<RealVector> x_init = std::nullopt);

// beta_1 = floor = sqrt(lambda / (4 L)).
GuessCheckResult run_cor1_known_L(ObjectivePtr objective, const Domain& domain,
                                  double lambda, double smoothness,
                                  std::size_t budget,
                                  std::optional<RealVector> x_init =
                                      std::nullopt);

// beta_1 = 1, floor 0.
GuessCheckResult run_cor1_unknown_L(ObjectivePtr objective,
                                    const Domain& domain, double lambda,
                                    std::size_t budget,
                                    std::optional<RealVector> x_init =
                                        std::nullopt);

struct GridSearchResult {
  RealVector output;
  double output_value = 0.0;
  std::size_t chosen = 0;  // 0 is the start point, i >= 1 the i-th instance
  double lambda_hat = 0.0;
  std::size_t probe_queries = 0;
  std::size_t instance_budget = 0;
  std::size_t queries = 0;
  std::vector<double> lambdas;  // lambda_i, i = 1 .. M
  std::vector<GuessCheckResult> instances;
};

// ceil(2 log2 T).
std::size_t grid_size(std::size_t budget);

// Runs ceil(2 log2 T) guess-and-check instances over a dyadic grid of
// curvature guesses below the probe estimate and keeps the best output.
GridSearchResult grid_search_run(ObjectivePtr objective, std::size_t budget,
                                 const RealVector& x0);

}  // namespace holderopt

#endif  // HOLDEROPT_STRONGLY_CONVEX_HPP_
