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

#ifndef HOLDEROPT_METRICS_HPP_
#define HOLDEROPT_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "holderopt/domain.hpp"
#include "holderopt/objective.hpp"
#include "holderopt/online_learners.hpp"
#include "holderopt/online_sequence.hpp"

namespace holderopt {

struct MinimumReport {
  RealVector point;
  double value = 0.0;
  bool exact = true;  // false when found by the projected subgradient fallback
};

// min over the domain of 1/2 sum_i e_i (x_i - c_i)^2.
MinimumReport diagonal_quadratic_minimum(const RealVector& center,
                                         const RealVector& eigenvalues,
                                         const Domain& domain);

// Closed form for the shipped objectives where one exists, otherwise
// projected subgradient descent to tolerance 1e-10.
MinimumReport constrained_minimum(const Objective& objective,
                                  const Domain& domain);

// Incremental min over the domain of sum_{s <= t} f_s.
class ComparatorTracker {
 public:
  ComparatorTracker(const OnlineSequence& seq, const Domain& domain);

  // Folds in the next round's loss.
  void advance();
  std::size_t rounds() const { return rounds_; }
  MinimumReport minimum() const;

 private:
  const OnlineSequence* seq_;
  Domain domain_;
  std::size_t rounds_ = 0;
  RealVector coefficient_sum_;
  RealVector center_sum_;
  RealVector center_square_sum_;  // per coordinate
  std::optional<MinimumReport> fixed_minimum_;
};

struct RegretReport {
  double value = 0.0;
  double comparator_value = 0.0;
  bool exact = true;
};

// sum_t f_t(x_t) - min_x sum_t f_t(x).
RegretReport regret(const OnlineSequence& seq, const OnlineTrace& trace,
                    const Domain& domain);

struct VariationOptions {
  bool force_estimate = false;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  double radius = 4.0;  // sampling radius on all_space
};

struct VariationReport {
  double value = 0.0;
  bool exact = true;
};

// V_T = sum_{t >= 2} sup_x |grad f_t(x) - grad f_{t-1}(x)|^2.
VariationReport gradient_variation(const OnlineSequence& seq, std::size_t rounds,
                                   const Domain& domain,
                                   const VariationOptions& options = {});

// max_t sup_x |grad f_t(x) - grad f_{t+1}(x)|^2.
VariationReport ghat_max(const OnlineSequence& seq, std::size_t rounds,
                         const Domain& domain,
                         const VariationOptions& options = {});

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

LinearFit least_squares(std::span<const double> xs, std::span<const double> ys);

// Slope of log(value) against log(x) after dropping the first `burn_in`
// fraction of points (at least four points are always kept).
double loglog_slope(std::span<const double> xs, std::span<const double> values,
                    double burn_in = 0.25);

struct GeometricRate {
  double rate = 0.0;  // per-query contraction: value ~ C exp(-rate q)
  double r_squared = 0.0;
};

GeometricRate geometric_rate(std::span<const double> queries,
                             std::span<const double> values);

// One row of an emitted trace; absent fields are written empty.
struct RunRow {
  std::size_t round = 0;
  std::size_t queries = 0;
  std::optional<double> subopt;
  std::optional<double> regret_partial;
  std::optional<double> eta;
  std::optional<double> beta;
  std::optional<bool> accepted;
};

struct RunTrace {
  std::vector<RunRow> rows;
  RealVector final_point;
  std::optional<double> final_value;
  std::optional<double> final_subopt;
  std::optional<double> final_regret;
  std::size_t rounds = 0;
  std::size_t total_queries = 0;
};

}  // namespace holderopt

#endif  // HOLDEROPT_METRICS_HPP_
