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

#ifndef HOLDEROPT_CERTIFICATES_HPP_
#define HOLDEROPT_CERTIFICATES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>

#include "holderopt/conversion.hpp"
#include "holderopt/domain.hpp"
#include "holderopt/online_learners.hpp"
#include "holderopt/strongly_convex.hpp"

namespace holderopt {

struct Certificate {
  bool pass = true;
  double worst = 0.0;  // worst observed slack or residual
  std::string detail;  // empty on pass
};

// l(x_bar_T) - l(x*) <= weighted_regret(x*) / alpha_{1:T} + 1e-9.
Certificate check_conversion_bound(const ConversionTrace& trace,
                                   const Objective& objective,
                                   const RealVector& optimum);

// Stabilization identity at every round to relative `tolerance`.
Certificate check_stabilization(const ConversionTrace& trace,
                                double tolerance = 1e-10);

// sum a_t / sqrt(floor + A_t) <= 2 sqrt(floor + A_T).
Certificate check_self_confident_tuning(double lhs, double rhs);

// Beta monotone with the floor, accepted-step certificate, query ledger and
// weight recursion.
Certificate check_guess_check(const GuessCheckResult& result,
                              std::size_t budget);

// Idempotence and the obtuse-angle optimality condition on sampled points.
Certificate check_projection(const Domain& domain, std::size_t samples,
                             std::uint64_t seed, double spread = 4.0);

}  // namespace holderopt

#endif  // HOLDEROPT_CERTIFICATES_HPP_
