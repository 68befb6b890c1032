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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "holderopt/certificates.hpp"
#include "holderopt/conversion.hpp"
#include "holderopt/errors.hpp"
#include "holderopt/metrics.hpp"
#include "holderopt/problems.hpp"

using namespace holderopt;

namespace {

const RealVector kCenter{0.5, -0.3, 0.2};
const RealVector kStart{1.2, 0.4, -0.3};
const Domain kBall = Domain::ball(RealVector{0.0, 0.0, 0.0}, 1.5);

// Straight transcription of the weighted probe method with naive sums.
struct Reference {
  RealVector output;
  std::size_t queries = 0;
  std::size_t rounds = 0;
};

Reference reference_universal(const Objective& f, const Domain& dom,
                              std::size_t budget, const RealVector& x1) {
  const double d = dom.diameter();
  RealVector x_hat = x1;
  double acc = 0.0;
  std::vector<RealVector> xs;
  std::vector<double> alphas;
  Reference ref;
  for (std::size_t t = 1;; ++t) {
    const std::size_t cost = t == 1 ? 1 : 2;
    if (ref.queries + cost > budget) break;
    const double alpha = static_cast<double>(t);
    double alpha_sum = alpha;
    for (double a : alphas) alpha_sum += a;
    RealVector m(x1.dim());
    if (t >= 2) {
      RealVector tilde = alpha * xs.back();
      for (std::size_t s = 0; s < xs.size(); ++s) tilde += alphas[s] * xs[s];
      m = alpha * f.gradient(tilde / alpha_sum);
      ++ref.queries;
    }
    const double eta = d / (2.0 * std::sqrt(1e-12 + acc));
    const RealVector x = dom.project(x_hat - eta * m);
    xs.push_back(x);
    alphas.push_back(alpha);
    RealVector avg(x1.dim());
    for (std::size_t s = 0; s < xs.size(); ++s) avg += alphas[s] * xs[s];
    avg = avg / alpha_sum;
    const RealVector g = alpha * f.gradient(avg);
    ++ref.queries;
    x_hat = dom.project(x_hat - eta * g);
    acc += squared_norm(g - m);
    ref.output = avg;
    ref.rounds = t;
  }
  return ref;
}

ConversionRecord hand_record(double weight, double grad, double played) {
  ConversionRecord r;
  r.weight = weight;
  r.gradient = RealVector{grad};
  r.played = RealVector{played};
  return r;
}

}  // namespace

TEST_CASE("universal method matches a naive transcription") {
  const std::vector<ObjectivePtr> zoo = {
      make_quadratic(kCenter, RealVector{1.0, 3.0, 8.0}),
      make_holder_power(kCenter, 0.5), make_nonsmooth(kCenter, 0.0)};
  for (const auto& f : zoo) {
    for (std::size_t budget : {1u, 2u, 3u, 9u, 40u}) {
      UniversalConvexOptions opts;
      opts.x_init = kStart;
      const auto trace = universal_convex_optimize(f, kBall, budget, {}, opts);
      const auto ref = reference_universal(*f, kBall, budget, kStart);
      CAPTURE(f->name());
      CAPTURE(budget);
      CHECK(trace.rounds == ref.rounds);
      CHECK(trace.queries == ref.queries);
      CHECK(distance(trace.output, ref.output) <= 1e-12);
    }
  }
}

TEST_CASE("query accounting") {
  const auto f = make_quadratic(kCenter, RealVector{1.0, 2.0, 3.0});
  for (std::size_t budget : {1u, 2u, 5u, 32u, 33u, 1000u}) {
    const auto trace = universal_convex_optimize(f, kBall, budget);
    CHECK(trace.rounds == (budget + 1) / 2);
    CHECK(trace.queries == 2 * trace.rounds - 1);
    CHECK(trace.queries <= budget);
  }
  const auto one = universal_convex_optimize(f, kBall, 1);
  CHECK(one.rounds == 1);
  CHECK(one.queries == 1);
  CHECK(one.output == kBall.center());
  CHECK_FALSE(one.records.front().probe.has_value());
  CHECK_THROWS_AS(universal_convex_optimize(f, kBall, 0), ContractViolation);
  CHECK_THROWS(universal_convex_optimize(f, Domain::all_space(3), 10));
}

TEST_CASE("unit weights give the plain average") {
  const auto f = make_holder_power(kCenter, 0.5);
  const auto trace = baseline_ogd(f, kBall, 25);
  CHECK(trace.rounds == 25);
  RealVector mean(3);
  for (const auto& r : trace.records) mean += r.played;
  mean = mean / 25.0;
  CHECK(distance(mean, trace.output) <= 1e-14);
  CHECK(trace.weight_sum == 25.0);
}

TEST_CASE("identical plays average to themselves") {
  const auto f = make_linear(RealVector{0.0, 0.0, 0.0});
  GradientOracle oracle(f, 10);
  OptimisticOgd learner(kBall, kStart, ConstantSchedule{1.0});
  ConversionOptions opts;
  opts.weights = [](std::size_t t) { return static_cast<double>(t); };
  opts.max_rounds = 3;
  const auto trace = o2b_run(learner, oracle, opts);
  CHECK(trace.rounds == 3);
  CHECK(trace.weight_sum == 6.0);
  CHECK(distance(trace.output, kStart) <= 1e-15);
}

TEST_CASE("weighted regret examples") {
  ConversionTrace one;
  one.records.push_back(hand_record(1.0, 3.0, 0.7));
  CHECK(weighted_regret(one, RealVector{0.7}) == 0.0);

  ConversionTrace two;
  two.records.push_back(hand_record(1.0, 1.0, 0.0));
  two.records.push_back(hand_record(2.0, -1.0, 1.0));
  CHECK(weighted_regret(two, RealVector{0.0}) == -2.0);
}

TEST_CASE("thinned traces keep weighted regret exact") {
  const auto f = make_quadratic(kCenter, RealVector{1.0, 4.0, 9.0});
  UniversalConvexOptions full;
  UniversalConvexOptions thin;
  thin.stride = 7;
  const auto a = universal_convex_optimize(f, kBall, 201, {}, full);
  const auto b = universal_convex_optimize(f, kBall, 201, {}, thin);
  CHECK(a.output == b.output);
  CHECK(b.records.back().round == b.rounds);
  CHECK(b.records.size() < a.records.size());
  const RealVector u{0.1, 0.2, -0.4};
  CHECK(weighted_regret(b, u) ==
        doctest::Approx(weighted_regret(a, u)).epsilon(1e-12));
}

TEST_CASE("conversion certificates hold on the shipped zoo") {
  const std::vector<ObjectivePtr> zoo = {
      make_quadratic(kCenter, RealVector{1.0, 3.0, 8.0}),
      make_quadratic(RealVector{3.0, 0.0, 0.0}, RealVector{1.0, 1.0, 2.0}),
      make_holder_power(kCenter, 0.25), make_holder_power(kCenter, 0.5),
      make_holder_power(kCenter, 1.0), make_nonsmooth(kCenter, 0.0),
      make_nonsmooth(RealVector{2.0, 1.0, 0.0}, 1.0)};
  for (const auto& f : zoo) {
    const auto opt = constrained_minimum(*f, kBall);
    for (std::size_t budget : {16u, 101u, 512u}) {
      UniversalConvexOptions opts;
      opts.x_init = kStart;
      const auto trace = universal_convex_optimize(f, kBall, budget, {}, opts);
      CAPTURE(f->name());
      CAPTURE(budget);
      CHECK(check_conversion_bound(trace, *f, opt.point).pass);
      CHECK(check_stabilization(trace).pass);
      CHECK(check_self_confident_tuning(trace.tuning_lhs, trace.tuning_rhs).pass);
      CHECK(trace.steps_non_increasing);
      CHECK(trace.max_infeasibility <= 1e-10);
      CHECK(trace.output_value >= opt.value - 1e-12);
    }
  }
}

TEST_CASE("conversion runs are deterministic") {
  const auto f = make_holder_power(kCenter, 0.5);
  OracleOptions noisy{NoiseMode::kStochastic, 0.5, 42};
  const auto a = universal_convex_optimize(f, kBall, 300, noisy);
  const auto b = universal_convex_optimize(f, kBall, 300, noisy);
  CHECK(a.output == b.output);
  noisy.seed = 43;
  const auto c = universal_convex_optimize(f, kBall, 300, noisy);
  CHECK_FALSE(a.output == c.output);
}

TEST_CASE("smooth objective converges fast") {
  const auto f = make_quadratic(kCenter, RealVector{1.0, 3.0, 8.0});
  const auto t64 = universal_convex_optimize(f, kBall, 64);
  const auto t512 = universal_convex_optimize(f, kBall, 512);
  CHECK(t512.output_value < t64.output_value / 16.0);
}
