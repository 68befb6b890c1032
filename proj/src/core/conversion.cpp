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

#include "holderopt/conversion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "holderopt/errors.hpp"

namespace holderopt {

namespace {

// Neumaier-compensated running sum of weighted points.
class CompensatedSum {
 public:
  explicit CompensatedSum(std::size_t dim) : sum_(dim, 0.0), comp_(dim, 0.0) {}

  void add(double weight, const RealVector& x) {
    for (std::size_t i = 0; i < sum_.size(); ++i) {
      const double term = weight * x[i];
      const double t = sum_[i] + term;
      if (std::abs(sum_[i]) >= std::abs(term)) {
        comp_[i] += (sum_[i] - t) + term;
      } else {
        comp_[i] += (term - t) + sum_[i];
      }
      sum_[i] = t;
    }
  }

  RealVector value() const {
    std::vector<double> out(sum_.size());
    for (std::size_t i = 0; i < sum_.size(); ++i) out[i] = sum_[i] + comp_[i];
    return RealVector(std::move(out));
  }

 private:
  std::vector<double> sum_;
  std::vector<double> comp_;
};

double relative_stabilization(double prev_sum, const RealVector& prev_avg,
                              double weight, double weight_sum,
                              const RealVector& avg, const RealVector& x) {
  const RealVector lhs = prev_sum * (prev_avg - avg);
  const RealVector rhs = weight * (avg - x);
  const double scale =
      weight_sum * std::max({1.0, norm(prev_avg), norm(avg), norm(x)});
  return distance(lhs, rhs) / scale;
}

}  // namespace

ConversionTrace o2b_run(OptimisticOgd learner, GradientOracle& oracle,
                        const ConversionOptions& options) {
  const Domain& domain = learner.domain();
  if (oracle.objective().dim() != domain.dim()) {
    throw ContractViolation("objective and domain dimensions differ");
  }
  if (!options.weights) throw ContractViolation("weights must be provided");
  const std::size_t stride = std::max<std::size_t>(options.stride, 1);
  const std::size_t dim = domain.dim();

  ConversionTrace trace;
  trace.stride = stride;
  const double floor =
      std::holds_alternative<AdaGradSchedule>(learner.schedule())
          ? std::get<AdaGradSchedule>(learner.schedule()).floor
          : 0.0;

  CompensatedSum point_sum(dim);
  double weight_sum = 0.0;
  RealVector prev_played;
  RealVector prev_avg;
  double weighted_loss = 0.0;
  RealVector weighted_gradient(dim);
  double prev_eta = std::numeric_limits<double>::infinity();
  std::optional<ConversionRecord> pending;

  for (std::size_t t = 1;; ++t) {
    if (options.max_rounds != 0 && t > options.max_rounds) break;
    const bool probe = options.optimism == OptimismRule::kProbe && t >= 2;
    const std::size_t needed = probe ? 2 : 1;
    if (oracle.remaining() < needed) break;

    const double weight = options.weights(t);
    if (!(weight > 0.0) || !std::isfinite(weight)) {
      throw ContractViolation("conversion weights must be positive");
    }
    const double next_sum = weight_sum + weight;

    RealVector optimism(dim);
    std::optional<RealVector> probe_point;
    if (probe) {
      // x_tilde_t = (sum_{s<t} alpha_s x_s + alpha_t x_{t-1}) / alpha_{1:t}
      RealVector tilde = axpy(weight, prev_played, point_sum.value());
      tilde = tilde / next_sum;
      optimism = weight * oracle.gradient(tilde);
      probe_point = std::move(tilde);
    }

    const RealVector played = learner.predict(optimism);
    const double eta = learner.step_size();
    point_sum.add(weight, played);
    const RealVector avg = point_sum.value() / next_sum;
    const RealVector grad = oracle.gradient(avg);
    learner.update(weight * grad);

    double residual = 0.0;
    if (t >= 2) {
      residual = relative_stabilization(weight_sum, prev_avg, weight, next_sum,
                                        avg, played);
    }
    trace.max_stabilization_residual =
        std::max(trace.max_stabilization_residual, residual);
    if (floor > 0.0) {
      trace.tuning_lhs += learner.last_increment() /
                          std::sqrt(floor + learner.accumulator());
    }
    if (eta > prev_eta) trace.steps_non_increasing = false;
    prev_eta = eta;
    trace.max_infeasibility =
        std::max({trace.max_infeasibility, domain.distance_to(played),
                  domain.distance_to(learner.intermediate())});

    weight_sum = next_sum;
    weighted_loss += weight * inner(grad, played);
    weighted_gradient += weight * grad;

    const double value = oracle.value(avg);
    ConversionRecord rec{t, oracle.queries_used(), weight, weight_sum, played,
                         avg, grad, probe_point, eta, learner.accumulator(),
                         value, residual, weighted_loss, weighted_gradient};
    if (t % stride == 0 || t == 1) {
      trace.records.push_back(std::move(rec));
      pending.reset();
    } else {
      pending = std::move(rec);
    }
    trace.rounds = t;
    trace.output = avg;
    trace.output_value = value;
    prev_played = played;
    prev_avg = avg;
  }
  if (pending) trace.records.push_back(std::move(*pending));
  if (trace.rounds == 0) {
    throw BudgetExhausted("budget too small for a single conversion round");
  }
  trace.queries = oracle.queries_used();
  trace.weight_sum = weight_sum;
  if (floor > 0.0) {
    trace.tuning_rhs = 2.0 * std::sqrt(floor + learner.accumulator());
  }
  return trace;
}

namespace {

RealVector start_point(const Domain& domain,
                       const UniversalConvexOptions& options) {
  return options.x_init ? *options.x_init : domain.center();
}

}  // namespace

ConversionTrace universal_convex_optimize(
    ObjectivePtr objective, const Domain& domain, std::size_t budget,
    const OracleOptions& oracle_options, const UniversalConvexOptions& options) {
  if (!domain.bounded()) {
    throw ContractViolation(
        "universal convex method needs a domain with finite diameter");
  }
  GradientOracle oracle(std::move(objective), budget, oracle_options);
  OptimisticOgd learner(domain, start_point(domain, options),
                        AdaGradSchedule{domain.diameter(), options.floor});
  ConversionOptions conv;
  conv.weights = [](std::size_t t) { return static_cast<double>(t); };
  conv.optimism = OptimismRule::kProbe;
  conv.stride = options.stride;
  return o2b_run(std::move(learner), oracle, conv);
}

ConversionTrace baseline_ogd(ObjectivePtr objective, const Domain& domain,
                             std::size_t budget,
                             const OracleOptions& oracle_options,
                             const UniversalConvexOptions& options) {
  if (!domain.bounded()) {
    throw ContractViolation("baseline OGD needs a domain with finite diameter");
  }
  GradientOracle oracle(std::move(objective), budget, oracle_options);
  OptimisticOgd learner(domain, start_point(domain, options),
                        AdaGradSchedule{domain.diameter(), options.floor});
  ConversionOptions conv;
  conv.optimism = OptimismRule::kNone;
  conv.stride = options.stride;
  return o2b_run(std::move(learner), oracle, conv);
}

double weighted_regret(const ConversionTrace& trace,
                       const RealVector& comparator) {
  if (trace.records.empty()) return 0.0;
  if (trace.stride <= 1) {
    double sum = 0.0;
    for (const auto& rec : trace.records) {
      sum += rec.weight * inner(rec.gradient, rec.played - comparator);
    }
    return sum;
  }
  const auto& last = trace.records.back();
  return last.weighted_loss - inner(last.weighted_gradient, comparator);
}

}  // namespace holderopt
