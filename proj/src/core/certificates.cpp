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

#include "holderopt/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace holderopt {

namespace {

Certificate fail(double worst, const std::string& detail) {
  return {false, worst, detail};
}

}  // namespace

Certificate check_conversion_bound(const ConversionTrace& trace,
                                   const Objective& objective,
                                   const RealVector& optimum) {
  const double bound = weighted_regret(trace, optimum) / trace.weight_sum;
  const double gap = objective.value(trace.output) - objective.value(optimum);
  const double slack = bound + 1e-9 - gap;
  if (slack < 0.0) {
    std::ostringstream os;
    os << "suboptimality " << gap << " exceeds weighted regret bound " << bound;
    return fail(slack, os.str());
  }
  return {true, slack, {}};
}

Certificate check_stabilization(const ConversionTrace& trace,
                                double tolerance) {
  const double worst = trace.max_stabilization_residual;
  if (!(worst <= tolerance)) {
    std::ostringstream os;
    os << "stabilization residual " << worst << " above " << tolerance;
    return fail(worst, os.str());
  }
  return {true, worst, {}};
}

Certificate check_self_confident_tuning(double lhs, double rhs) {
  const double slack = rhs * (1.0 + 1e-12) - lhs;
  if (slack < 0.0) {
    std::ostringstream os;
    os << "tuning sum " << lhs << " exceeds " << rhs;
    return fail(slack, os.str());
  }
  return {true, slack, {}};
}

Certificate check_guess_check(const GuessCheckResult& result,
                              std::size_t budget) {
  std::ostringstream os;
  double worst = 0.0;
  if (result.queries > budget) {
    os << "queries " << result.queries << " exceed budget " << budget << "; ";
  }
  if (result.records.size() + 1 != result.queries) {
    os << "query ledger mismatch; ";
  }
  std::size_t rejected = 0;
  for (const auto& rec : result.records) rejected += rec.accepted ? 0 : 1;
  if (rejected != result.rejections) os << "rejection count mismatch; ";

  double prev_beta = 1.0;
  for (double beta : result.accepted_betas) {
    if (beta > prev_beta || beta < result.beta_floor) {
      os << "beta " << beta << " breaks monotonicity or floor; ";
    }
    prev_beta = beta;
  }
  for (const auto& rec : result.records) {
    if (!rec.accepted || rec.by_floor || rec.sentinel) continue;
    const double lhs = rec.beta * rec.beta * 4.0 * rec.smoothness.value_or(0.0);
    const double excess = lhs - result.lambda * (1.0 + kCheckSlack);
    worst = std::max(worst, excess);
    if (excess > 0.0) {
      os << "accepted beta " << rec.beta << " violates the smoothness check; ";
    }
  }
  for (std::size_t i = 0; i < result.accepted_betas.size(); ++i) {
    const double step =
        result.log_weight_sums[i + 1] - result.log_weight_sums[i];
    const double rel = std::abs(std::expm1(step - std::log1p(
                                                      result.accepted_betas[i])));
    if (rel > 1e-12) os << "weight recursion off by " << rel << "; ";
  }
  if (result.max_stabilization_residual > 1e-10) {
    os << "stabilization residual " << result.max_stabilization_residual
       << "; ";
  }
  const std::string detail = os.str();
  if (!detail.empty()) return fail(worst, detail);
  return {true, worst, {}};
}

Certificate check_projection(const Domain& domain, std::size_t samples,
                             std::uint64_t seed, double spread) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double scale =
      domain.bounded() ? spread * std::max(domain.diameter(), 1.0) : spread;
  double worst = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    std::vector<double> raw(domain.dim());
    for (double& v : raw) v = scale * normal(rng);
    const RealVector p = domain.center() + RealVector(std::move(raw));
    const RealVector q = domain.project(p);
    if (!(domain.project(q) == q)) {
      return fail(distance(domain.project(q), q), "projection not idempotent");
    }
    const RealVector y = sample_point(domain, rng, domain.center(), scale);
    const double angle = inner(p - q, y - q);
    const double tol =
        1e-10 * std::max(1.0, norm(p - q) * std::max(1.0, norm(y - q)));
    worst = std::max(worst, angle);
    if (angle > tol) {
      std::ostringstream os;
      os << "optimality condition violated by " << angle;
      return fail(angle, os.str());
    }
  }
  return {true, worst, {}};
}

}  // namespace holderopt
