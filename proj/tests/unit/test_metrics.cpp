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
#include "holderopt/online_learners.hpp"
#include "holderopt/problems.hpp"

using namespace holderopt;

namespace {

RealVector random_vector(std::mt19937_64& rng, std::size_t dim, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  RealVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v.set(i, g(rng));
  return v;
}

double total_loss(const OnlineSequence& seq, std::size_t rounds,
                  const RealVector& x) {
  double sum = 0.0;
  for (std::size_t t = 1; t <= rounds; ++t) sum += seq.at(t).value(x);
  return sum;
}

std::vector<double> powers_of_two(int lo, int hi) {
  std::vector<double> out;
  for (int k = lo; k <= hi; ++k) out.push_back(std::ldexp(1.0, k));
  return out;
}

}  // namespace

TEST_CASE("regret examples") {
  const Domain box = Domain::box(RealVector{-1.0}, RealVector{1.0});
  SequenceParams zero;
  zero.horizon = 4;
  zero.base = make_linear(RealVector{0.0});
  const auto z = make_online_sequence(SequenceFamily::kFixed, zero, 0);
  CHECK(regret(z, run_online_convex(z, box, 4), box).value == 0.0);

  SequenceParams lin;
  lin.horizon = 1;
  lin.base = make_linear(RealVector{1.0});
  const auto s = make_online_sequence(SequenceFamily::kFixed, lin, 0);
  const auto r = regret(s, run_online_convex(s, box, 1), box);
  CHECK(r.value == 1.0);
  CHECK(r.comparator_value == -1.0);
  CHECK(r.exact);
}

TEST_CASE("fixed quadratic regret stays bounded") {
  const Domain ball = Domain::ball(RealVector{0.0, 0.0}, 2.0);
  SequenceParams p;
  p.horizon = 4096;
  p.base = make_quadratic(RealVector{0.5, -0.5}, RealVector{1.0, 3.0});
  const auto seq = make_online_sequence(SequenceFamily::kFixed, p, 0);
  std::vector<double> values;
  for (std::size_t t = 256; t <= 4096; t *= 2) {
    values.push_back(regret(seq, run_online_convex(seq, ball, t), ball).value);
  }
  for (double v : values) CHECK(v <= 3.0 * values.front() + 1e-9);
}

TEST_CASE("comparator tracker agrees with brute force") {
  std::mt19937_64 rng(51);
  const Domain ball = Domain::ball(RealVector{0.0, 0.0}, 1.0);
  SequenceParams p;
  p.horizon = 30;
  p.center = RealVector{0.9, 0.4};
  p.eigenvalues = RealVector{1.0, 5.0};
  p.drift = 0.1;
  const auto seq = make_online_sequence(SequenceFamily::kDriftingQuadratic, p, 8);
  ComparatorTracker tracker(seq, ball);
  for (std::size_t t = 1; t <= 30; ++t) {
    tracker.advance();
    const auto m = tracker.minimum();
    CHECK(ball.contains(m.point, 1e-12));
    CHECK(total_loss(seq, t, m.point) == doctest::Approx(m.value).epsilon(1e-12));
    for (int i = 0; i < 10; ++i) {
      const RealVector u = ball.project(random_vector(rng, 2, 1.0));
      REQUIRE(m.value <= total_loss(seq, t, u) + 1e-10);
    }
  }
}

TEST_CASE("approximate comparator is never beaten") {
  std::mt19937_64 rng(52);
  const Domain ball = Domain::ball(RealVector{0.0, 0.0, 0.0}, 1.0);
  SequenceParams p;
  p.horizon = 50;
  p.base = make_nonsmooth(RealVector{2.0, 0.1, -0.3}, 0.5);
  const auto seq = make_online_sequence(SequenceFamily::kFixed, p, 0);
  const auto trace = run_online_convex(seq, ball, 50);
  const auto r = regret(seq, trace, ball);
  for (int i = 0; i < 10; ++i) {
    const RealVector u = ball.project(random_vector(rng, 3, 1.0));
    CHECK(r.value >= trace.cumulative_loss - total_loss(seq, 50, u) - 1e-9);
  }
}

TEST_CASE("constrained minima") {
  const Domain ball = Domain::ball(RealVector{0.0, 0.0}, 1.0);
  const auto inside = constrained_minimum(
      *make_quadratic(RealVector{0.2, 0.1}, RealVector{1.0, 2.0}), ball);
  CHECK(inside.exact);
  CHECK(inside.value == 0.0);

  // Outside center: the minimizer is on the sphere and satisfies KKT.
  const auto q = make_quadratic(RealVector{2.0, 1.0}, RealVector{1.0, 4.0});
  const auto m = constrained_minimum(*q, ball);
  CHECK(norm(m.point) == doctest::Approx(1.0).epsilon(1e-12));
  const RealVector g = q->gradient(m.point);
  CHECK(std::abs(g[0] * m.point[1] - g[1] * m.point[0]) <= 1e-9);
  CHECK(inner(g, m.point) < 0.0);

  const auto lin = constrained_minimum(
      *make_linear(RealVector{1.0, -2.0}),
      Domain::box(RealVector{-1.0, -1.0}, RealVector{1.0, 1.0}));
  CHECK(lin.point == RealVector{-1.0, 1.0});
  CHECK(lin.value == -3.0);

  std::mt19937_64 rng(53);
  const auto ns = make_nonsmooth(RealVector{1.5, -1.2}, 1.0);
  const auto nm = constrained_minimum(*ns, ball);
  for (int i = 0; i < 200; ++i) {
    const RealVector u = ball.project(random_vector(rng, 2, 1.0));
    REQUIRE(nm.value <= ns->value(u) + 1e-10);
  }
}

TEST_CASE("variation examples") {
  const Domain box = Domain::box(RealVector{-1.0, -1.0}, RealVector{1.0, 1.0});
  SequenceParams lin;
  lin.horizon = 3;
  lin.coefficients = RealVector{0.0, 0.0};
  lin.drift = 0.01;
  lin.drift_direction = RealVector{1.0, 0.0};
  const auto d = make_online_sequence(SequenceFamily::kDriftingLinear, lin, 0);
  CHECK(ghat_max(d, 3, box).value == doctest::Approx(1e-4).epsilon(1e-12));
  CHECK(gradient_variation(d, 3, box).exact);

  SequenceParams sw;
  sw.horizon = 9;
  sw.coefficients = RealVector{1.0};
  const auto s = make_online_sequence(SequenceFamily::kAdversarialSwitch, sw, 0);
  const Domain unit = Domain::box(RealVector{-1.0}, RealVector{1.0});
  CHECK(ghat_max(s, 9, unit).value == 4.0);
  CHECK(gradient_variation(s, 9, unit).value == 32.0);

  SequenceParams fixed;
  fixed.horizon = 9;
  fixed.base = make_holder_power(RealVector{0.0, 0.0}, 0.5);
  const auto f = make_online_sequence(SequenceFamily::kFixed, fixed, 0);
  CHECK(ghat_max(f, 9, box).value == 0.0);
}

TEST_CASE("monte carlo variation agrees with the exact value") {
  const Domain ball = Domain::ball(RealVector{0.0, 0.0, 0.0}, 1.0);
  SequenceParams lin;
  lin.horizon = 40;
  lin.coefficients = RealVector{1.0, 0.0, -1.0};
  lin.drift = 0.03;
  const auto seq = make_online_sequence(SequenceFamily::kDriftingLinear, lin, 9);
  VariationOptions mc;
  mc.force_estimate = true;
  const auto exact = gradient_variation(seq, 40, ball);
  const auto est = gradient_variation(seq, 40, ball, mc);
  CHECK(exact.exact);
  CHECK_FALSE(est.exact);
  CHECK(est.value == doctest::Approx(exact.value).epsilon(1e-12));
  CHECK(exact.value == doctest::Approx(39 * 0.03 * 0.03).epsilon(1e-12));
}

TEST_CASE("drifting quadratic variation is a boundary supremum") {
  const Domain ball = Domain::ball(RealVector{0.0, 0.0}, 1.0);
  SequenceParams p;
  p.horizon = 10;
  p.center = RealVector{0.0, 0.0};
  p.eigenvalues = RealVector{1.0, 3.0};
  p.drift = 0.1;
  p.drift_direction = RealVector{0.0, 1.0};
  const auto seq = make_online_sequence(SequenceFamily::kDriftingQuadratic, p, 0);
  // grad f_t - grad f_{t-1} = E (c_{t-1} - c_t) = (0, -0.3) everywhere.
  CHECK(gradient_variation(seq, 10, ball).value ==
        doctest::Approx(9 * 0.09).epsilon(1e-12));
}

TEST_CASE("loglog slope examples") {
  const auto ts = powers_of_two(1, 5);
  std::vector<double> quad, root, mixed;
  for (double t : ts) {
    quad.push_back(3.0 / (t * t));
    root.push_back(2.0 / std::sqrt(t));
    mixed.push_back(0.01 / (t * t) + 5.0 / std::sqrt(t));
  }
  CHECK(loglog_slope(ts, quad, 0.0) == doctest::Approx(-2.0).epsilon(1e-9));
  CHECK(loglog_slope(ts, root, 0.0) == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(std::abs(loglog_slope(ts, mixed, 0.0) + 0.5) < 0.01);
  CHECK_THROWS(loglog_slope(ts, std::vector<double>{1.0, 2.0, 0.0, 1.0, 1.0}));
  CHECK_THROWS(loglog_slope(std::vector<double>{1.0, 2.0, 3.0},
                            std::vector<double>{1.0, 2.0, 3.0}));
}

TEST_CASE("loglog slope burn in keeps four points") {
  const auto ts = powers_of_two(0, 7);
  std::vector<double> ys;
  for (double t : ts) ys.push_back(t < 4 ? 1.0 : 1.0 / t);
  // The first quarter (two points) is dropped; the rest is an exact 1/t.
  CHECK(loglog_slope(ts, ys) == doctest::Approx(-1.0).epsilon(1e-9));
  const auto four = powers_of_two(0, 3);
  CHECK(loglog_slope(four, std::vector<double>{1.0, 0.5, 0.25, 0.125}) ==
        doctest::Approx(-1.0));
}

TEST_CASE("geometric rate examples") {
  std::vector<double> qs, ys, flat;
  for (int c = 0; c < 50; ++c) {
    qs.push_back(c);
    ys.push_back(std::exp(-0.1 * c));
    flat.push_back(2.5);
  }
  const auto r = geometric_rate(qs, ys);
  CHECK(r.rate == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(r.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(geometric_rate(qs, flat).rate) < 1e-12);
  CHECK_THROWS(geometric_rate(std::vector<double>{1.0, 2.0, 3.0},
                              std::vector<double>{1.0, 0.5, 0.25}));
}

TEST_CASE("least squares") {
  const std::vector<double> xs{0.0, 1.0, 2.0, 3.0};
  const std::vector<double> ys{1.0, 3.0, 5.0, 7.0};
  const auto fit = least_squares(xs, ys);
  CHECK(fit.slope == doctest::Approx(2.0));
  CHECK(fit.intercept == doctest::Approx(1.0));
  CHECK(fit.r_squared == doctest::Approx(1.0));
  CHECK(fit.points == 4);
}

TEST_CASE("projection certificates") {
  CHECK(check_projection(Domain::ball(RealVector{1.0, 2.0}, 0.5), 500, 1).pass);
  CHECK(check_projection(
            Domain::box(RealVector{0.0, -1.0, 2.0}, RealVector{1.0, 0.0, 2.0}),
            500, 2)
            .pass);
  CHECK(check_projection(Domain::all_space(4), 500, 3).pass);
}

TEST_CASE("self confident tuning certificate") {
  CHECK(check_self_confident_tuning(1.0, 2.0).pass);
  CHECK_FALSE(check_self_confident_tuning(2.5, 2.0).pass);
}
