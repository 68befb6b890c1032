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

#include "holderopt/online_learners.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "holderopt/errors.hpp"

namespace holderopt {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void validate(const StepSchedule& schedule) {
  std::visit(
      Overloaded{
          [](const AdaGradSchedule& s) {
            if (!(s.diameter > 0.0) || !std::isfinite(s.diameter)) {
              throw ContractViolation(
                  "adaptive step size needs a finite positive diameter");
            }
            if (!(s.floor > 0.0)) {
              throw ContractViolation("step floor must be positive");
            }
          },
          [](const StronglyConvexSchedule& s) {
            if (!(s.lambda > 0.0) || !std::isfinite(s.lambda)) {
              throw ContractViolation("lambda must be positive");
            }
            if (!(s.factor > 0.0)) {
              throw ContractViolation("step factor must be positive");
            }
          },
          [](const ConstantSchedule& s) {
            if (!(s.eta > 0.0) || !std::isfinite(s.eta)) {
              throw ContractViolation("constant step must be positive");
            }
          }},
      schedule);
}

}  // namespace

OptimisticOgd::OptimisticOgd(Domain domain, RealVector x_init,
                             StepSchedule schedule)
    : domain_(std::move(domain)), schedule_(schedule) {
  validate(schedule_);
  if (x_init.dim() != domain_.dim()) {
    throw ContractViolation("initial point dimension mismatch");
  }
  if (!domain_.contains(x_init, 1e-12)) {
    throw ContractViolation("initial point is not feasible");
  }
  x_hat_ = domain_.project(x_init);
  x_play_ = x_hat_;
  optimism_ = RealVector(domain_.dim());
}

double OptimisticOgd::step_size() const {
  return std::visit(
      Overloaded{[&](const AdaGradSchedule& s) {
                   return s.diameter / (2.0 * std::sqrt(s.floor + accumulator_));
                 },
                 [&](const StronglyConvexSchedule& s) {
                   return s.factor /
                          (s.lambda * static_cast<double>(round_));
                 },
                 [](const ConstantSchedule& s) { return s.eta; }},
      schedule_);
}

const RealVector& OptimisticOgd::predict(const RealVector& optimism) {
  if (awaiting_update_) {
    throw ContractViolation("predict called twice without update");
  }
  require_same_dim(optimism, x_hat_);
  eta_ = step_size();
  optimism_ = optimism;
  x_play_ = domain_.project(axpy(-eta_, optimism_, x_hat_));
  awaiting_update_ = true;
  return x_play_;
}

void OptimisticOgd::update(const RealVector& gradient) {
  if (!awaiting_update_) {
    throw ContractViolation("update called without a preceding predict");
  }
  require_same_dim(gradient, x_hat_);
  x_hat_ = domain_.project(axpy(-eta_, gradient, x_hat_));
  last_increment_ = squared_norm(gradient - optimism_);
  accumulator_ += last_increment_;
  ++round_;
  awaiting_update_ = false;
}

RealVector one_step_update(const RealVector& x, const RealVector& g,
                           const RealVector& optimism,
                           const RealVector& next_optimism, double eta,
                           const Domain& domain) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw ContractViolation("one-step update needs a positive step size");
  }
  require_same_dim(x, g);
  require_same_dim(x, optimism);
  require_same_dim(x, next_optimism);
  return domain.project(axpy(-eta, g - optimism + next_optimism, x));
}

OnlineTrace run_online(const OnlineSequence& seq, OptimisticOgd learner,
                       std::size_t rounds, std::size_t stride) {
  if (rounds == 0) throw ContractViolation("rounds must be >= 1");
  if (rounds > seq.horizon()) {
    throw ContractViolation("rounds exceed the sequence horizon");
  }
  if (seq.dim() != learner.domain().dim()) {
    throw ContractViolation("sequence and domain dimensions differ");
  }
  if (stride == 0) stride = 1;

  OnlineTrace trace;
  trace.stride = stride;
  if (const auto* ada = std::get_if<AdaGradSchedule>(&learner.schedule())) {
    trace.floor = ada->floor;
  }
  const Domain& domain = learner.domain();
  RealVector optimism(seq.dim());
  double prev_eta = std::numeric_limits<double>::infinity();

  for (std::size_t t = 1; t <= rounds; ++t) {
    const Objective& f = seq.at(t);
    const RealVector x_hat = learner.intermediate();
    const RealVector& x = learner.predict(optimism);
    const double eta = learner.step_size();
    const RealVector grad = f.gradient(x);
    const double loss = f.value(x);
    const RealVector played = x;
    learner.update(grad);

    trace.cumulative_loss += loss;
    const double a = learner.last_increment();
    if (trace.floor > 0.0) {
      trace.tuning_lhs += a / std::sqrt(trace.floor + learner.accumulator());
    }
    trace.max_infeasibility =
        std::max({trace.max_infeasibility, domain.distance_to(played),
                  domain.distance_to(learner.intermediate())});
    if (eta > prev_eta) trace.steps_non_increasing = false;
    prev_eta = eta;

    if (t % stride == 0 || t == rounds || t == 1) {
      trace.records.push_back(OnlineRecord{t, played, x_hat, grad, eta, a,
                                           learner.accumulator(), loss,
                                           trace.cumulative_loss});
    }
    optimism = grad;
    trace.final_point = played;
  }
  trace.rounds = rounds;
  if (trace.floor > 0.0) {
    trace.tuning_rhs = 2.0 * std::sqrt(trace.floor + learner.accumulator());
  }
  return trace;
}

namespace {

RealVector initial_point(const Domain& domain, const OnlineRunOptions& opt) {
  if (opt.x_init) return *opt.x_init;
  return domain.center();
}

}  // namespace

OnlineTrace run_online_convex(const OnlineSequence& seq, const Domain& domain,
                              std::size_t rounds,
                              const OnlineRunOptions& options) {
  if (!domain.bounded()) {
    throw ContractViolation(
        "adaptive optimistic OGD needs a domain with finite diameter");
  }
  OptimisticOgd learner(domain, initial_point(domain, options),
                        AdaGradSchedule{domain.diameter(), options.floor});
  return run_online(seq, std::move(learner), rounds, options.stride);
}

OnlineTrace run_online_strongly_convex(const OnlineSequence& seq,
                                       const Domain& domain, double lambda,
                                       std::size_t rounds,
                                       const OnlineRunOptions& options) {
  if (!(lambda > 0.0)) throw ContractViolation("lambda must be positive");
  OptimisticOgd learner(domain, initial_point(domain, options),
                        StronglyConvexSchedule{lambda, 6.0});
  return run_online(seq, std::move(learner), rounds, options.stride);
}

}  // namespace holderopt
