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

#include "holderopt/strongly_convex.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "holderopt/errors.hpp"

namespace holderopt {

std::optional<double> empirical_smoothness(double value_a, double value_b,
                                           const RealVector& grad_a,
                                           const RealVector& grad_b,
                                           const RealVector& a,
                                           const RealVector& b) {
  const double divergence = bregman_divergence(value_a, value_b, grad_b, a, b);
  const double scale =
      std::max({1.0, std::abs(value_a), std::abs(value_b)});
  if (divergence <= kDivergenceFloor * scale) return std::nullopt;
  return squared_norm(grad_a - grad_b) / (2.0 * divergence);
}

std::optional<double> empirical_smoothness(const Objective& objective,
                                           const RealVector& a,
                                           const RealVector& b) {
  return empirical_smoothness(objective.value(a), objective.value(b),
                              objective.gradient(a), objective.gradient(b), a,
                              b);
}

namespace {

double stabilization_residual(double ratio, const RealVector& prev_avg,
                              const RealVector& avg, const RealVector& x) {
  const RealVector lhs = (1.0 - ratio) * (prev_avg - avg);
  const RealVector rhs = ratio * (avg - x);
  const double scale = std::max({1.0, norm(prev_avg), norm(avg), norm(x)});
  return distance(lhs, rhs) / scale;
}

}  // namespace

GuessCheckResult guess_check_run(GradientOracle& oracle, const Domain& domain,
                                 const GuessCheckOptions& options) {
  const Objective& objective = oracle.objective();
  if (objective.dim() != domain.dim()) {
    throw ContractViolation("objective and domain dimensions differ");
  }
  if (!oracle.deterministic()) {
    throw ContractViolation(
        "guess-and-check requires a deterministic gradient oracle");
  }
  const double lambda = options.lambda;
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ContractViolation("lambda must be positive and finite");
  }
  if (!(options.beta_initial > 0.0) || options.beta_initial > 1.0) {
    throw ContractViolation("beta_1 must lie in (0, 1]");
  }
  if (!(options.beta_floor >= 0.0) ||
      options.beta_floor > options.beta_initial) {
    throw ContractViolation("beta floor must lie in [0, beta_1]");
  }
  if (oracle.remaining() < 1) {
    throw ContractViolation("guess-and-check needs a budget of at least 1");
  }
  const RealVector start = options.x_init ? *options.x_init : domain.center();
  require_same_dim(start, RealVector(domain.dim()));
  if (!domain.contains(start, 1e-12)) {
    throw ContractViolation("start point lies outside the domain");
  }

  GuessCheckResult result;
  result.lambda = lambda;
  result.beta_floor = options.beta_floor;

  RealVector x = start;
  RealVector avg = start;
  RealVector avg_grad = oracle.gradient(avg);
  double avg_value = objective.value(avg);
  RealVector optimism(domain.dim());  // M_t / alpha_t
  double ratio = 1.0;                 // alpha_t / alpha_{1:t}
  double log_weight_sum = 0.0;
  double beta = options.beta_initial;
  std::size_t t = 1;
  result.log_weight_sums.push_back(0.0);

  while (!oracle.exhausted()) {
    const RealVector surrogate = avg_grad + lambda * (x - avg);  // g_t / alpha_t
    const double eta = std::exp(-std::log(lambda) - log_weight_sum);
    double guess = beta;
    while (!oracle.exhausted()) {
      const double next_ratio = guess / (1.0 + guess);
      const RealVector probe = axpy(next_ratio, x - avg, avg);
      const RealVector next_optimism = avg_grad + lambda * (x - probe);
      RealVector direction = ratio * (surrogate - optimism);
      direction += guess * next_optimism;
      const RealVector next_x = domain.project(axpy(-1.0 / lambda, direction, x));
      const RealVector next_avg =
          axpy(1.0 - next_ratio, avg, next_ratio * next_x);
      const RealVector next_grad = oracle.gradient(next_avg);
      const double next_value = objective.value(next_avg);
      const double residual =
          stabilization_residual(next_ratio, avg, next_avg, next_x);

      GuessCheckRecord rec;
      rec.query = oracle.queries_used();
      rec.beta = guess;
      rec.eta = eta;
      rec.stabilization_residual = residual;
      bool accept = false;
      if (guess == options.beta_floor) {
        accept = true;
        rec.by_floor = true;
      } else {
        const auto smoothness = empirical_smoothness(
            avg_value, next_value, avg_grad, next_grad, avg, next_avg);
        if (!smoothness) {
          accept = true;
          rec.sentinel = true;
        } else {
          rec.smoothness = smoothness;
          accept = guess * guess * 4.0 * *smoothness <=
                   lambda * (1.0 + kCheckSlack);
        }
      }
      rec.accepted = accept;
      if (accept) {
        x = next_x;
        avg = next_avg;
        avg_grad = next_grad;
        avg_value = next_value;
        optimism = next_optimism;
        ratio = next_ratio;
        log_weight_sum += std::log1p(guess);
        beta = guess;
        ++t;
        result.accepted_betas.push_back(guess);
        result.log_weight_sums.push_back(log_weight_sum);
        result.max_stabilization_residual =
            std::max(result.max_stabilization_residual, residual);
      } else {
        ++result.rejections;
        guess = std::max(guess / 2.0, options.beta_floor);
      }
      rec.iteration = t;
      rec.log_weight_sum = log_weight_sum;
      rec.value = avg_value;
      result.records.push_back(std::move(rec));
      if (accept) break;
    }
  }

  result.output = avg;
  result.output_value = avg_value;
  result.iterations = t;
  result.queries = oracle.queries_used();
  result.nonconvergent = result.rejections > result.accepted_betas.size();
  return result;
}

GuessCheckResult guess_check_run(ObjectivePtr objective, const Domain& domain,
                                 std::size_t budget,
                                 const GuessCheckOptions& options) {
  GradientOracle oracle(std::move(objective), budget);
  return guess_check_run(oracle, domain, options);
}

double thm4_beta_floor(std::size_t budget) {
  if (budget < 1) throw ContractViolation("budget must be positive");
  const double t = static_cast<double>(budget);
  return std::expm1(std::log(t) / t);
}

GuessCheckResult run_thm4(ObjectivePtr objective, const Domain& domain,
                          double lambda, std::size_t budget,
                          std::optional<RealVector> x_init) {
  GuessCheckOptions options;
  options.lambda = lambda;
  options.beta_initial = 1.0;
  options.beta_floor = thm4_beta_floor(budget);
  options.x_init = std::move(x_init);
  return guess_check_run(std::move(objective), domain, budget, options);
}

GuessCheckResult run_cor1_known_L(ObjectivePtr objective, const Domain& domain,
                                  double lambda, double smoothness,
                                  std::size_t budget,
                                  std::optional<RealVector> x_init) {
  if (!(lambda > 0.0)) throw ContractViolation("lambda must be positive");
  if (!(smoothness >= lambda)) {
    throw ContractViolation("smoothness constant must be at least lambda");
  }
  GuessCheckOptions options;
  options.lambda = lambda;
  options.beta_initial = std::sqrt(lambda / (4.0 * smoothness));
  options.beta_floor = options.beta_initial;
  options.x_init = std::move(x_init);
  return guess_check_run(std::move(objective), domain, budget, options);
}

GuessCheckResult run_cor1_unknown_L(ObjectivePtr objective,
                                    const Domain& domain, double lambda,
                                    std::size_t budget,
                                    std::optional<RealVector> x_init) {
  GuessCheckOptions options;
  options.lambda = lambda;
  options.beta_initial = 1.0;
  options.beta_floor = 0.0;
  options.x_init = std::move(x_init);
  return guess_check_run(std::move(objective), domain, budget, options);
}

std::size_t grid_size(std::size_t budget) {
  if (budget < 2) throw ContractViolation("grid search needs a budget >= 2");
  return static_cast<std::size_t>(
      std::ceil(2.0 * std::log2(static_cast<double>(budget))));
}

GridSearchResult grid_search_run(ObjectivePtr objective, std::size_t budget,
                                 const RealVector& x0) {
  if (!objective) throw ContractViolation("objective must not be null");
  if (objective->dim() != x0.dim()) {
    throw ContractViolation("start point and objective dimensions differ");
  }
  const std::size_t instances = grid_size(budget);
  if (budget < 2 * instances) {
    throw ContractViolation("grid search needs T >= 2 ceil(2 log2 T)");
  }
  const Domain domain = Domain::all_space(x0.dim());

  GradientOracle probe_oracle(objective, budget);
  const RealVector grad_a = probe_oracle.gradient(x0);
  double lambda_hat = 0.0;
  for (int k = 0; k < 64; ++k) {
    const RealVector b = x0 + std::ldexp(1.0, k) * RealVector::unit(x0.dim(), 0);
    const RealVector grad_b = probe_oracle.gradient(b);
    const double diff = distance(grad_a, grad_b);
    if (diff > 0.0) {
      lambda_hat = diff / distance(x0, b);
      break;
    }
  }
  if (!(lambda_hat > 0.0) || !std::isfinite(lambda_hat)) {
    throw NumericError("curvature probe found no gradient change");
  }

  GridSearchResult result;
  result.lambda_hat = lambda_hat;
  result.probe_queries = probe_oracle.queries_used();
  if (budget - result.probe_queries < instances) {
    throw BudgetExhausted("probe left no budget for the grid instances");
  }
  result.instance_budget = (budget - result.probe_queries) / instances;
  result.output = x0;
  result.output_value = objective->value(x0);
  result.queries = result.probe_queries;
  for (std::size_t i = 1; i <= instances; ++i) {
    const double lambda_i = std::ldexp(lambda_hat, -static_cast<int>(i));
    result.lambdas.push_back(lambda_i);
    GuessCheckResult run = run_cor1_unknown_L(objective, domain, lambda_i,
                                              result.instance_budget, x0);
    result.queries += run.queries;
    if (run.output_value < result.output_value) {
      result.output = run.output;
      result.output_value = run.output_value;
      result.chosen = i;
    }
    result.instances.push_back(std::move(run));
  }
  return result;
}

}  // namespace holderopt
