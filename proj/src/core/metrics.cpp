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

#include "holderopt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "holderopt/errors.hpp"
#include "holderopt/problems.hpp"

namespace holderopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double diagonal_value(const RealVector& x, const RealVector& center,
                      const RealVector& eigenvalues) {
  double sum = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double d = x[i] - center[i];
    sum += eigenvalues[i] * d * d;
  }
  return 0.5 * sum;
}

MinimumReport linear_minimum(const RealVector& c, const Domain& domain) {
  const std::size_t dim = c.dim();
  switch (domain.kind()) {
    case DomainKind::kBall: {
      const double n = norm(c);
      RealVector point = n > 0.0 ? axpy(-domain.radius() / n, c, domain.center())
                                 : domain.center();
      point = domain.project(point);
      return {point, inner(c, point), true};
    }
    case DomainKind::kBox: {
      std::vector<double> out(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        if (c[i] > 0.0) {
          out[i] = domain.lower()[i];
        } else if (c[i] < 0.0) {
          out[i] = domain.upper()[i];
        } else {
          out[i] = 0.5 * (domain.lower()[i] + domain.upper()[i]);
        }
      }
      RealVector point(std::move(out));
      return {point, inner(c, point), true};
    }
    case DomainKind::kAllSpace:
      break;
  }
  if (squared_norm(c) == 0.0) return {RealVector(dim), 0.0, true};
  return {RealVector(dim), -kInf, true};
}

MinimumReport subgradient_minimum(const Objective& objective,
                                  const Domain& domain) {
  RealVector x = domain.project(objective.info().optimum_point
                                    ? *objective.info().optimum_point
                                    : domain.center());
  RealVector best = x;
  double best_value = objective.value(x);
  const double scale = domain.bounded() ? domain.diameter() : 1.0;
  constexpr std::size_t kIterations = 200000;
  double previous = best_value;
  for (std::size_t k = 0; k < kIterations; ++k) {
    const RealVector g = objective.gradient(x);
    const double gn = norm(g);
    if (gn == 0.0) break;
    const double step = scale / (gn * std::sqrt(static_cast<double>(k) + 1.0));
    x = domain.project(axpy(-step, g, x));
    const double v = objective.value(x);
    if (v < best_value) {
      best_value = v;
      best = x;
    }
    if (k % 1000 == 999) {
      if (previous - best_value <= 1e-10 * std::max(1.0, std::abs(best_value))) {
        break;
      }
      previous = best_value;
    }
  }
  return {best, best_value, false};
}

// Center outside the ball. With multiplier mu each coordinate (relative to
// the ball center) minimizes lambda/2 (x - c)^2 + |x - c| + mu/2 x^2; the
// norm of that minimizer decreases in mu, so mu is found by bisection.
MinimumReport nonsmooth_ball_minimum(const NonsmoothObjective& objective,
                                     const Domain& domain) {
  const RealVector offset = objective.center() - domain.center();
  const double lambda = objective.lambda();
  const double r = domain.radius();
  auto solve = [&](double mu) {
    std::vector<double> out(offset.dim());
    for (std::size_t i = 0; i < offset.dim(); ++i) {
      const double c = offset[i];
      const double above = (lambda * c - 1.0) / (lambda + mu);
      const double below = (lambda * c + 1.0) / (lambda + mu);
      out[i] = above > c ? above : (below < c ? below : c);
    }
    return RealVector(std::move(out));
  };
  double lo = 0.0;
  double hi = 1.0;
  while (norm(solve(hi)) > r) hi *= 2.0;
  if (lambda == 0.0) lo = std::numeric_limits<double>::min();
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (norm(solve(mid)) > r ? lo : hi) = mid;
  }
  const RealVector point = domain.project(domain.center() + solve(hi));
  return {point, objective.value(point), true};
}

}  // namespace

MinimumReport diagonal_quadratic_minimum(const RealVector& center,
                                         const RealVector& eigenvalues,
                                         const Domain& domain) {
  require_same_dim(center, eigenvalues);
  require_same_dim(center, RealVector(domain.dim()));
  RealVector point = center;
  if (domain.kind() == DomainKind::kBox) {
    point = domain.project(center);
  } else if (domain.kind() == DomainKind::kBall && !domain.contains(center)) {
    // x(mu) = z + e (c - z) / (e + mu); bisect |x(mu) - z| = r.
    const RealVector& z = domain.center();
    const RealVector offset = center - z;
    const double r = domain.radius();
    auto radius_at = [&](double mu) {
      double s = 0.0;
      for (std::size_t i = 0; i < offset.dim(); ++i) {
        const double v = eigenvalues[i] * offset[i] / (eigenvalues[i] + mu);
        s += v * v;
      }
      return std::sqrt(s);
    };
    double lo = 0.0;
    double hi = *std::max_element(eigenvalues.begin(), eigenvalues.end()) *
                (norm(offset) / r);
    while (radius_at(hi) > r) hi *= 2.0;
    for (int it = 0; it < 200 && lo < hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (radius_at(mid) > r ? lo : hi) = mid;
    }
    std::vector<double> out(offset.dim());
    for (std::size_t i = 0; i < offset.dim(); ++i) {
      out[i] = z[i] + eigenvalues[i] * offset[i] / (eigenvalues[i] + hi);
    }
    point = domain.project(RealVector(std::move(out)));
  }
  return {point, diagonal_value(point, center, eigenvalues), true};
}

MinimumReport constrained_minimum(const Objective& objective,
                                  const Domain& domain) {
  require_same_dim(RealVector(objective.dim()), RealVector(domain.dim()));
  if (const auto* q = dynamic_cast<const QuadraticObjective*>(&objective)) {
    return diagonal_quadratic_minimum(q->center(), q->eigenvalues(), domain);
  }
  if (const auto* h = dynamic_cast<const HolderPowerObjective*>(&objective)) {
    // Radial and increasing in |x - c|: the projection of c is optimal.
    const RealVector point = domain.project(h->center());
    return {point, objective.value(point), true};
  }
  if (const auto* l = dynamic_cast<const LinearObjective*>(&objective)) {
    return linear_minimum(l->coefficients(), domain);
  }
  if (const auto* n = dynamic_cast<const NonsmoothObjective*>(&objective)) {
    // Separable with per-coordinate minimum at c_i: clamping is optimal on
    // boxes and all space.
    if (domain.kind() != DomainKind::kBall || domain.contains(n->center())) {
      const RealVector point = domain.project(n->center());
      return {point, objective.value(point), true};
    }
    return nonsmooth_ball_minimum(*n, domain);
  }
  const auto& info = objective.info();
  if (info.optimum_point && domain.contains(*info.optimum_point)) {
    return {*info.optimum_point, objective.value(*info.optimum_point), true};
  }
  return subgradient_minimum(objective, domain);
}

ComparatorTracker::ComparatorTracker(const OnlineSequence& seq,
                                     const Domain& domain)
    : seq_(&seq),
      domain_(domain),
      coefficient_sum_(seq.dim()),
      center_sum_(seq.dim()),
      center_square_sum_(seq.dim()) {
  require_same_dim(RealVector(seq.dim()), RealVector(domain.dim()));
  if (seq.family() == SequenceFamily::kFixed) {
    fixed_minimum_ = constrained_minimum(seq.at(1), domain);
  }
}

void ComparatorTracker::advance() {
  if (rounds_ >= seq_->horizon()) {
    throw ContractViolation("comparator advanced past the sequence horizon");
  }
  ++rounds_;
  switch (seq_->family()) {
    case SequenceFamily::kFixed:
      break;
    case SequenceFamily::kDriftingLinear:
    case SequenceFamily::kAdversarialSwitch:
      coefficient_sum_ += seq_->linear_coefficients()[rounds_ - 1];
      break;
    case SequenceFamily::kDriftingQuadratic: {
      const RealVector& c = seq_->centers()[rounds_ - 1];
      center_sum_ += c;
      for (std::size_t i = 0; i < c.dim(); ++i) {
        center_square_sum_.set(i, center_square_sum_[i] + c[i] * c[i]);
      }
      break;
    }
  }
}

MinimumReport ComparatorTracker::minimum() const {
  const double t = static_cast<double>(rounds_);
  if (rounds_ == 0) return {domain_.center(), 0.0, true};
  switch (seq_->family()) {
    case SequenceFamily::kFixed:
      return {fixed_minimum_->point, t * fixed_minimum_->value,
              fixed_minimum_->exact};
    case SequenceFamily::kDriftingLinear:
    case SequenceFamily::kAdversarialSwitch:
      return linear_minimum(coefficient_sum_, domain_);
    case SequenceFamily::kDriftingQuadratic: {
      // sum_s q(x; c_s) = t q(x; c_bar) + 1/2 sum_i e_i (sum c_i^2 - t c_bar_i^2)
      const RealVector& e = seq_->eigenvalues();
      const RealVector mean = center_sum_ / t;
      MinimumReport m = diagonal_quadratic_minimum(mean, e, domain_);
      double offset = 0.0;
      for (std::size_t i = 0; i < e.dim(); ++i) {
        offset += e[i] * (center_square_sum_[i] - t * mean[i] * mean[i]);
      }
      m.value = t * m.value + 0.5 * std::max(offset, 0.0);
      return m;
    }
  }
  return {domain_.center(), 0.0, true};
}

RegretReport regret(const OnlineSequence& seq, const OnlineTrace& trace,
                    const Domain& domain) {
  ComparatorTracker tracker(seq, domain);
  for (std::size_t t = 0; t < trace.rounds; ++t) tracker.advance();
  const MinimumReport m = tracker.minimum();
  return {trace.cumulative_loss - m.value, m.value, m.exact};
}

namespace {

template <typename Reduce>
VariationReport variation(const OnlineSequence& seq, std::size_t rounds,
                          const Domain& domain, const VariationOptions& options,
                          Reduce reduce) {
  if (rounds > seq.horizon()) {
    throw ContractViolation("rounds exceed the sequence horizon");
  }
  require_same_dim(RealVector(seq.dim()), RealVector(domain.dim()));
  VariationReport report;
  if (rounds < 2) return report;
  if (seq.constant_gradient_differences() && !options.force_estimate) {
    const RealVector p = domain.center();
    RealVector prev = seq.at(1).gradient(p);
    for (std::size_t t = 2; t <= rounds; ++t) {
      RealVector cur = seq.at(t).gradient(p);
      report.value = reduce(report.value, squared_norm(cur - prev));
      prev = std::move(cur);
    }
    return report;
  }
  report.exact = false;
  std::mt19937_64 rng(options.seed);
  const RealVector anchor(domain.dim());
  std::vector<RealVector> points;
  points.reserve(options.samples);
  for (std::size_t k = 0; k < options.samples; ++k) {
    points.push_back(sample_point(domain, rng, anchor, options.radius));
  }
  std::vector<RealVector> prev;
  prev.reserve(points.size());
  for (const auto& p : points) prev.push_back(seq.at(1).gradient(p));
  for (std::size_t t = 2; t <= rounds; ++t) {
    double sup = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
      RealVector cur = seq.at(t).gradient(points[k]);
      sup = std::max(sup, squared_norm(cur - prev[k]));
      prev[k] = std::move(cur);
    }
    report.value = reduce(report.value, sup);
  }
  return report;
}

}  // namespace

VariationReport gradient_variation(const OnlineSequence& seq, std::size_t rounds,
                                   const Domain& domain,
                                   const VariationOptions& options) {
  return variation(seq, rounds, domain, options,
                   [](double acc, double v) { return acc + v; });
}

VariationReport ghat_max(const OnlineSequence& seq, std::size_t rounds,
                         const Domain& domain, const VariationOptions& options) {
  return variation(seq, rounds, domain, options,
                   [](double acc, double v) { return std::max(acc, v); });
}

LinearFit least_squares(std::span<const double> xs,
                        std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw ContractViolation("fit inputs differ in length");
  }
  if (xs.size() < 2) throw ContractViolation("fit needs at least two points");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw NumericError("fit abscissae are all equal");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : (ss_res == 0.0 ? 1.0 : 0.0);
  fit.points = xs.size();
  return fit;
}

double loglog_slope(std::span<const double> xs, std::span<const double> values,
                    double burn_in) {
  if (xs.size() != values.size()) {
    throw ContractViolation("slope inputs differ in length");
  }
  const std::size_t n = xs.size();
  if (n < 4) throw ContractViolation("slope fit needs at least four points");
  if (!(burn_in >= 0.0 && burn_in < 1.0)) {
    throw ContractViolation("burn-in fraction must lie in [0, 1)");
  }
  const std::size_t drop = static_cast<std::size_t>(
      std::floor(burn_in * static_cast<double>(n)));
  const std::size_t keep = std::max<std::size_t>(n - drop, 4);
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = n - keep; i < n; ++i) {
    if (!(xs[i] > 0.0) || !(values[i] > 0.0)) {
      throw NumericError("log-log fit needs positive values");
    }
    lx.push_back(std::log(xs[i]));
    ly.push_back(std::log(values[i]));
  }
  return least_squares(lx, ly).slope;
}

GeometricRate geometric_rate(std::span<const double> queries,
                             std::span<const double> values) {
  if (queries.size() != values.size()) {
    throw ContractViolation("rate inputs differ in length");
  }
  if (queries.size() < 4) {
    throw ContractViolation("rate fit needs at least four points");
  }
  std::vector<double> ly;
  ly.reserve(values.size());
  for (double v : values) {
    if (!(v > 0.0)) throw NumericError("rate fit needs positive values");
    ly.push_back(std::log(v));
  }
  const LinearFit fit = least_squares(queries, ly);
  return {-fit.slope, fit.r_squared};
}

}  // namespace holderopt
