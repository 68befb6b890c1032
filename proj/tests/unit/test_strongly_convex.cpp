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
#include <random>
#include <vector>

#include "doctest.h"
#include "holderopt/certificates.hpp"
#include "holderopt/errors.hpp"
#include "holderopt/metrics.hpp"
#include "holderopt/problems.hpp"
#include "holderopt/strongly_convex.hpp"

using namespace holderopt;

namespace {

RealVector random_vector(std::mt19937_64& rng, std::size_t dim, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  RealVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v.set(i, g(rng));
  return v;
}

struct RawRun {
  RealVector output;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::vector<double> betas;
};

// Guess-and-check with explicit weights alpha_t and alpha_{1:t}.
RawRun raw_guess_check(const Objective& f, const Domain& dom, double lambda,
                       double beta1, double floor, std::size_t budget,
                       const RealVector& start) {
  RawRun run;
  std::size_t c = 1;
  RealVector x = start;
  RealVector avg = start;
  RealVector grad = f.gradient(avg);
  double alpha = 1.0;
  double alpha_sum = 1.0;
  RealVector m(start.dim());
  double beta = beta1;
  while (c < budget) {
    const RealVector g = alpha * (grad + lambda * (x - avg));
    const double eta = 1.0 / (lambda * alpha_sum);
    double guess = beta;
    while (c < budget) {
      const double next_alpha = guess * alpha_sum;
      const double next_sum = alpha_sum + next_alpha;
      const RealVector tilde = (alpha_sum * avg + next_alpha * x) / next_sum;
      const RealVector next_m = next_alpha * (grad + lambda * (x - tilde));
      const RealVector next_x = dom.project(x - eta * (g - m + next_m));
      const RealVector next_avg = (alpha_sum * avg + next_alpha * next_x) / next_sum;
      const RealVector next_grad = f.gradient(next_avg);
      ++c;
      bool accept = guess == floor;
      if (!accept) {
        const auto l = empirical_smoothness(f, avg, next_avg);
        accept = !l || guess * guess * 4.0 * *l <= lambda * (1.0 + 1e-9);
      }
      if (accept) {
        x = next_x;
        avg = next_avg;
        grad = next_grad;
        m = next_m;
        alpha = next_alpha;
        alpha_sum = next_sum;
        beta = guess;
        run.betas.push_back(guess);
        ++run.accepted;
        break;
      }
      ++run.rejected;
      guess = std::max(guess / 2.0, floor);
    }
  }
  run.output = avg;
  return run;
}

}  // namespace

TEST_CASE("empirical smoothness of a unit quadratic is one") {
  const auto f = make_quadratic(RealVector{0.0}, RealVector{1.0});
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const RealVector a = random_vector(rng, 1, 3.0);
    const RealVector b = random_vector(rng, 1, 3.0);
    const auto l = empirical_smoothness(*f, a, b);
    REQUIRE(l);
    CHECK(*l == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK_FALSE(empirical_smoothness(*f, RealVector{0.7}, RealVector{0.7}));
}

TEST_CASE("empirical smoothness stays within the eigenvalue range") {
  const auto f = make_quadratic(RealVector{0.3, -0.2}, RealVector{1.0, 4.0});
  std::mt19937_64 rng(42);
  for (int i = 0; i < 10000; ++i) {
    const auto l = empirical_smoothness(*f, random_vector(rng, 2, 2.0),
                                        random_vector(rng, 2, 2.0));
    REQUIRE(l);
    REQUIRE(*l >= 1.0 - 1e-9);
    REQUIRE(*l <= 4.0 + 1e-9);
  }
}

TEST_CASE("halving example on the unit quadratic") {
  const auto f = make_quadratic(RealVector{0.0}, RealVector{1.0});
  GuessCheckOptions opts;
  opts.lambda = 1.0;
  opts.beta_initial = 1.0;
  opts.beta_floor = 0.0;
  opts.x_init = RealVector{3.0};
  const auto r = guess_check_run(f, Domain::all_space(1), 40, opts);
  CHECK(r.rejections == 1);
  REQUIRE(r.records.size() >= 2);
  CHECK(r.records[0].beta == 1.0);
  CHECK_FALSE(r.records[0].accepted);
  CHECK(*r.records[0].smoothness == doctest::Approx(1.0));
  for (double b : r.accepted_betas) CHECK(b == 0.5);
  CHECK(r.queries == 40);
}

TEST_CASE("beta at the floor skips the check") {
  const auto f = make_quadratic(RealVector{1.0, 2.0}, RealVector{1.0, 9.0});
  GuessCheckOptions opts;
  opts.lambda = 1.0;
  opts.beta_initial = 0.2;
  opts.beta_floor = 0.2;
  const auto r = guess_check_run(f, Domain::all_space(2), 30, opts);
  CHECK(r.iterations == 30);
  CHECK(r.rejections == 0);
  for (const auto& rec : r.records) CHECK(rec.by_floor);
}

TEST_CASE("floor formula") {
  CHECK(thm4_beta_floor(100) == doctest::Approx(0.04712).epsilon(1e-4));
  CHECK(thm4_beta_floor(100) == std::expm1(std::log(100.0) / 100.0));
  CHECK(thm4_beta_floor(1) == 0.0);
}

TEST_CASE("known smoothness fixes beta") {
  const auto f = make_quadratic(RealVector{0.5, 0.5}, RealVector{1.0, 4.0});
  const auto r = run_cor1_known_L(f, Domain::all_space(2), 1.0, 4.0, 25,
                                  RealVector{-1.0, 2.0});
  CHECK(r.accepted_betas.size() == 24);
  for (double b : r.accepted_betas) CHECK(b == 0.25);
  for (std::size_t t = 0; t < r.log_weight_sums.size(); ++t) {
    CHECK(r.log_weight_sums[t] ==
          doctest::Approx(static_cast<double>(t) * std::log(1.25)).epsilon(1e-12));
  }
  const auto fastest = run_cor1_known_L(f, Domain::all_space(2), 1.0, 1.0, 5);
  CHECK(fastest.accepted_betas.front() == 0.5);
  CHECK_THROWS(run_cor1_known_L(f, Domain::all_space(2), 1.0, 0.5, 5));
}

TEST_CASE("wasted queries are logarithmic") {
  RealVector eig(5);
  for (std::size_t i = 0; i < 5; ++i) eig.set(i, std::pow(100.0, i / 4.0));
  const auto f = make_quadratic(RealVector{0.5, -0.3, 0.2, 0.4, -0.6}, eig);
  const auto r = run_cor1_unknown_L(f, Domain::all_space(5), 1.0, 600,
                                    RealVector{1.5, 1.0, 0.5, -0.5, 0.3});
  CHECK(r.rejections >= 1);
  CHECK(r.rejections <= 5);
  CHECK(r.accepted_betas.back() <= 0.05 + 1e-12);
  CHECK_FALSE(r.nonconvergent);
  CHECK(r.output_value < 1e-6);
}

TEST_CASE("guess and check matches explicit weights") {
  const RealVector c{0.5, -0.3, 0.2};
  const std::vector<ObjectivePtr> zoo = {
      make_quadratic(c, RealVector{1.0, 3.0, 10.0}),
      make_quadratic(c, RealVector{2.0, 2.5, 3.0}),
      make_nonsmooth(c, 1.0)};
  const std::vector<Domain> domains = {
      Domain::all_space(3), Domain::ball(RealVector{0.0, 0.0, 0.0}, 0.4)};
  const RealVector start{0.1, 0.2, -0.1};
  for (const auto& f : zoo) {
    for (const auto& dom : domains) {
      const double lambda = f->info().strong_convexity;
      for (double floor : {0.0, thm4_beta_floor(60)}) {
        GuessCheckOptions opts;
        opts.lambda = lambda;
        opts.beta_initial = 1.0;
        opts.beta_floor = floor;
        opts.x_init = start;
        const auto r = guess_check_run(f, dom, 60, opts);
        const auto raw = raw_guess_check(*f, dom, lambda, 1.0, floor, 60, start);
        CAPTURE(f->name());
        CHECK(r.rejections == raw.rejected);
        CHECK(r.accepted_betas == raw.betas);
        CHECK(distance(r.output, raw.output) <=
              1e-12 * std::max(1.0, norm(raw.output)));
      }
    }
  }
}

TEST_CASE("guess and check certificates") {
  const RealVector c{0.5, -0.3, 0.2, 0.4};
  const std::vector<ObjectivePtr> zoo = {
      make_quadratic(c, RealVector{1.0, 2.0, 5.0, 25.0}),
      make_nonsmooth(c, 1.0), make_nonsmooth(c, 2.0)};
  const Domain ball = Domain::ball(RealVector(4, 0.0), 2.0);
  for (const auto& f : zoo) {
    const double lambda = f->info().strong_convexity;
    for (std::size_t budget : {2u, 17u, 300u}) {
      const auto a = run_thm4(f, ball, lambda, budget);
      const auto b = run_cor1_unknown_L(f, ball, lambda, budget);
      CAPTURE(f->name());
      CAPTURE(budget);
      CHECK(check_guess_check(a, budget).pass);
      CHECK(check_guess_check(b, budget).pass);
      CHECK(a.queries == budget);
      CHECK(a.records.size() + 1 == a.queries);
      CHECK(a.max_stabilization_residual <= 1e-10);
    }
  }
}

TEST_CASE("floor schedule converges on a quadratic") {
  const auto f = make_quadratic(RealVector{0.5, -0.3}, RealVector{1.0, 4.0});
  const auto r = run_thm4(f, Domain::all_space(2), 1.0, 200, RealVector{2.0, 2.0});
  CHECK(r.output_value < 1e-12);
}

TEST_CASE("nonsmooth input without a floor") {
  const auto f = make_nonsmooth(RealVector{0.5, -0.3}, 1.0);
  const auto r = run_cor1_unknown_L(f, Domain::all_space(2), 1.0, 2000,
                                    RealVector{2.0, 2.0});
  CHECK(r.queries == 2000);
  CHECK(check_guess_check(r, 2000).pass);
  // beta collapses far below the level any smooth objective would settle at.
  CHECK(r.accepted_betas.back() <= 1e-3);
  CHECK(r.rejections <= 2 * 11);
  CHECK_FALSE(r.nonconvergent);

  // Early on the halvings outnumber the accepted steps.
  const auto short_run = run_cor1_unknown_L(f, Domain::all_space(2), 1.0, 7,
                                            RealVector{2.0, 2.0});
  CHECK(short_run.rejections > short_run.accepted_betas.size());
  CHECK(short_run.nonconvergent);
}

TEST_CASE("guess and check input validation") {
  const auto f = make_quadratic(RealVector{0.0}, RealVector{1.0});
  GradientOracle noisy(f, 10, {NoiseMode::kStochastic, 1.0, 3});
  GuessCheckOptions opts;
  CHECK_THROWS_AS(guess_check_run(noisy, Domain::all_space(1), opts),
                  ContractViolation);
  opts.lambda = 0.0;
  CHECK_THROWS(guess_check_run(f, Domain::all_space(1), 10, opts));
  opts.lambda = 1.0;
  opts.beta_initial = 1.5;
  CHECK_THROWS(guess_check_run(f, Domain::all_space(1), 10, opts));
  opts.beta_initial = 0.5;
  opts.beta_floor = 0.6;
  CHECK_THROWS(guess_check_run(f, Domain::all_space(1), 10, opts));
  opts.beta_floor = 0.0;
  opts.x_init = RealVector{5.0};
  CHECK_THROWS(guess_check_run(f, Domain::ball(RealVector{0.0}, 1.0), 10, opts));
}

TEST_CASE("grid sizes") {
  CHECK(grid_size(1024) == 20);
  CHECK(grid_size(4096) == 24);
  CHECK(grid_size(1000) == 20);
  CHECK_THROWS(grid_size(1));
}

TEST_CASE("grid search on the unit quadratic") {
  const auto f = make_quadratic(RealVector{0.3}, RealVector{1.0});
  const auto g = grid_search_run(f, 1024, RealVector{2.0});
  CHECK(g.lambda_hat == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(g.lambdas.size() == 20);
  CHECK(g.lambdas[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(g.lambdas[0] <= 1.0);
  CHECK(1.0 <= 2.0 * g.lambdas[0]);
  CHECK(g.probe_queries == 2);
  CHECK(g.instance_budget == 51);
  CHECK(g.instances.size() == 20);
  CHECK(g.queries <= 1024);
}

TEST_CASE("grid search brackets the true modulus") {
  const auto f = make_quadratic(RealVector{0.5, -1.0}, RealVector{1.0, 16.0});
  const auto g = grid_search_run(f, 2048, RealVector{1.0, 1.0});
  CHECK(g.lambda_hat >= 1.0 - 1e-12);
  CHECK(g.lambda_hat <= 16.0 + 1e-12);
  bool bracketed = false;
  for (double l : g.lambdas) bracketed = bracketed || (l <= 1.0 && 1.0 <= 2 * l);
  CHECK(bracketed);

  double best = f->value(RealVector{1.0, 1.0});
  for (const auto& inst : g.instances) best = std::min(best, inst.output_value);
  CHECK(g.output_value == best);
  if (g.chosen > 0) CHECK(g.instances[g.chosen - 1].output_value == best);
  for (std::size_t i : {0u, 1u, 7u}) {
    const auto alone = run_cor1_unknown_L(f, Domain::all_space(2), g.lambdas[i],
                                          g.instance_budget,
                                          RealVector{1.0, 1.0});
    CHECK(alone.output == g.instances[i].output);
  }
}

TEST_CASE("grid search rejects tiny budgets") {
  const auto f = make_quadratic(RealVector{0.0}, RealVector{1.0});
  CHECK_THROWS(grid_search_run(f, 10, RealVector{1.0}));
}
