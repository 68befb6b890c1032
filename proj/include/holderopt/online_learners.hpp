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

#ifndef HOLDEROPT_ONLINE_LEARNERS_HPP_
#define HOLDEROPT_ONLINE_LEARNERS_HPP_

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "holderopt/domain.hpp"
#include "holderopt/online_sequence.hpp"

namespace holderopt {

inline constexpr double kDefaultStepFloor = 1e-12;

// eta_t = D / (2 sqrt(floor + A_{t-1})), A accumulating |g_t - M_t|^2.
struct AdaGradSchedule {
  double diameter = 1.0;
  double floor = kDefaultStepFloor;
};

// eta_t = factor / (lambda t).
struct StronglyConvexSchedule {
  double lambda = 1.0;
  double factor = 6.0;
};

struct ConstantSchedule {
  double eta = 1.0;
};

using StepSchedule =
    std::variant<AdaGradSchedule, StronglyConvexSchedule, ConstantSchedule>;

// Optimistic online gradient descent in its two-sequence form:
//
//   x_t       = P[x_hat_t - eta_t M_t]       (predict)
//   x_hat_t+1 = P[x_hat_t - eta_t g_t]       (update)
//
// predict() and update() must alternate, starting with predict().
class OptimisticOgd {
 public:
  OptimisticOgd(Domain domain, RealVector x_init, StepSchedule schedule);

  const RealVector& predict(const RealVector& optimism);
  void update(const RealVector& gradient);

  // Round of the pending or next predict, starting at 1.
  std::size_t round() const { return round_; }
  // eta_t for the current round.
  double step_size() const;
  // A_{t-1} before update(), A_t after it.
  double accumulator() const { return accumulator_; }
  // |g_t - M_t|^2 of the most recent update.
  double last_increment() const { return last_increment_; }

  const RealVector& intermediate() const { return x_hat_; }
  const RealVector& played() const { return x_play_; }
  const RealVector& optimism() const { return optimism_; }
  const Domain& domain() const { return domain_; }
  const StepSchedule& schedule() const { return schedule_; }
  bool awaiting_update() const { return awaiting_update_; }

 private:
  Domain domain_;
  StepSchedule schedule_;
  RealVector x_hat_;
  RealVector x_play_;
  RealVector optimism_;
  std::size_t round_ = 1;
  double accumulator_ = 0.0;
  double last_increment_ = 0.0;
  double eta_ = 0.0;
  bool awaiting_update_ = false;
};

// One-step form: x_t+1 = P[x_t - eta_t (g_t - M_t + M_t+1)].
RealVector one_step_update(const RealVector& x, const RealVector& g,
                           const RealVector& optimism,
                           const RealVector& next_optimism, double eta,
                           const Domain& domain);

struct OnlineRecord {
  std::size_t round = 0;
  RealVector played;        // x_t
  RealVector intermediate;  // x_hat_t
  RealVector gradient;      // grad f_t(x_t)
  double eta = 0.0;
  double increment = 0.0;    // |grad f_t(x_t) - M_t|^2
  double accumulator = 0.0;  // A_t
  double loss = 0.0;         // f_t(x_t)
  double cumulative_loss = 0.0;
};

struct OnlineTrace {
  std::vector<OnlineRecord> records;  // thinned by stride, last always kept
  std::size_t rounds = 0;
  std::size_t stride = 1;
  double floor = 0.0;  // step floor used by adagrad, 0 otherwise
  RealVector final_point;
  double cumulative_loss = 0.0;
  // Running totals over every round, independent of stride.
  double tuning_lhs = 0.0;  // sum_t a_t / sqrt(floor + A_t)
  double tuning_rhs = 0.0;  // 2 sqrt(floor + A_T)
  double max_infeasibility = 0.0;
  bool steps_non_increasing = true;
};

struct OnlineRunOptions {
  std::optional<RealVector> x_init;  // default: domain center
  double floor = kDefaultStepFloor;
  std::size_t stride = 1;
};

// Optimistic OGD with M_1 = 0, M_t = grad f_{t-1}(x_{t-1}) and the adaptive
// step D / (2 sqrt(floor + A_{t-1})). Requires a bounded domain.
OnlineTrace run_online_convex(const OnlineSequence& seq, const Domain& domain,
                              std::size_t rounds,
                              const OnlineRunOptions& options = {});

// Same optimism with eta_t = 6 / (lambda t).
OnlineTrace run_online_strongly_convex(const OnlineSequence& seq,
                                       const Domain& domain, double lambda,
                                       std::size_t rounds,
                                       const OnlineRunOptions& options = {});

// Shared driver: runs `learner` against seq with last-gradient optimism.
OnlineTrace run_online(const OnlineSequence& seq, OptimisticOgd learner,
                       std::size_t rounds, std::size_t stride = 1);

}  // namespace holderopt

#endif  // HOLDEROPT_ONLINE_LEARNERS_HPP_
