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

#include "holderopt/problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "holderopt/errors.hpp"

namespace holderopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

void require_dim(const Objective& obj, const RealVector& x) {
  if (x.dim() != obj.dim()) {
    throw ContractViolation(std::string(obj.name()) +
                            ": dimension mismatch " + std::to_string(x.dim()) +
                            " vs " + std::to_string(obj.dim()));
  }
}

CurvatureInfo quadratic_info(const RealVector& center,
                             const RealVector& eigenvalues) {
  require_same_dim(center, eigenvalues);
  if (center.empty()) throw ContractViolation("quadratic needs dimension >= 1");
  for (std::size_t i = 0; i < eigenvalues.dim(); ++i) {
    if (!(eigenvalues[i] > 0.0)) {
      throw ContractViolation("quadratic eigenvalues must be positive");
    }
    if (i > 0 && eigenvalues[i] < eigenvalues[i - 1]) {
      throw ContractViolation("quadratic eigenvalues must be sorted");
    }
  }
  CurvatureInfo info;
  info.strong_convexity = eigenvalues[0];
  info.smoothness = eigenvalues[eigenvalues.dim() - 1];
  info.holder_exponent = 1.0;
  info.holder_constant = info.smoothness;
  info.optimum_point = center;
  info.optimum_value = 0.0;
  return info;
}

CurvatureInfo holder_power_info(const RealVector& center, double nu) {
  if (center.empty()) {
    throw ContractViolation("holder_power needs dimension >= 1");
  }
  if (!(nu > 0.0 && nu <= 1.0)) {
    throw ContractViolation("holder_power exponent must lie in (0, 1]");
  }
  CurvatureInfo info;
  info.strong_convexity = 0.0;
  info.smoothness = nu == 1.0 ? 1.0 : kInf;
  info.holder_exponent = nu;
  info.holder_constant = std::pow(2.0, 1.0 - nu);
  info.optimum_point = center;
  info.optimum_value = 0.0;
  return info;
}

CurvatureInfo nonsmooth_info(const RealVector& center, double lambda) {
  if (center.empty()) throw ContractViolation("nonsmooth needs dimension >= 1");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ContractViolation("nonsmooth lambda must be finite and >= 0");
  }
  CurvatureInfo info;
  info.strong_convexity = lambda;
  info.smoothness = kInf;
  info.holder_exponent = 0.0;
  // Subgradients of the l1 term have norm at most sqrt(d); the quadratic part
  // has unbounded gradient differences over all space.
  if (lambda == 0.0) {
    info.holder_constant = 2.0 * std::sqrt(static_cast<double>(center.dim()));
  }
  info.optimum_point = center;
  info.optimum_value = 0.0;
  return info;
}

CurvatureInfo linear_info(const RealVector& c) {
  if (c.empty()) throw ContractViolation("linear needs dimension >= 1");
  CurvatureInfo info;
  info.strong_convexity = 0.0;
  info.smoothness = 0.0;
  info.holder_exponent = 1.0;
  info.holder_constant = 0.0;
  return info;
}

}  // namespace

QuadraticObjective::QuadraticObjective(RealVector center,
                                       RealVector eigenvalues)
    : Objective(quadratic_info(center, eigenvalues)),
      center_(std::move(center)),
      eigenvalues_(std::move(eigenvalues)) {}

double QuadraticObjective::value(const RealVector& x) const {
  require_dim(*this, x);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double d = x[i] - center_[i];
    sum += eigenvalues_[i] * d * d;
  }
  return 0.5 * sum;
}

RealVector QuadraticObjective::gradient(const RealVector& x) const {
  require_dim(*this, x);
  std::vector<double> g(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    g[i] = eigenvalues_[i] * (x[i] - center_[i]);
  }
  return RealVector(std::move(g));
}

HolderPowerObjective::HolderPowerObjective(RealVector center, double nu)
    : Objective(holder_power_info(center, nu)),
      center_(std::move(center)),
      nu_(nu) {}

double HolderPowerObjective::value(const RealVector& x) const {
  require_dim(*this, x);
  const double r = distance(x, center_);
  return std::pow(r, 1.0 + nu_) / (1.0 + nu_);
}

RealVector HolderPowerObjective::gradient(const RealVector& x) const {
  require_dim(*this, x);
  const double r = distance(x, center_);
  if (r == 0.0) return RealVector(x.dim());
  return std::pow(r, nu_ - 1.0) * (x - center_);
}

NonsmoothObjective::NonsmoothObjective(RealVector center, double lambda)
    : Objective(nonsmooth_info(center, lambda)),
      center_(std::move(center)),
      lambda_(lambda) {}

double NonsmoothObjective::value(const RealVector& x) const {
  require_dim(*this, x);
  double quad = 0.0;
  double l1 = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double d = x[i] - center_[i];
    quad += d * d;
    l1 += std::abs(d);
  }
  return 0.5 * lambda_ * quad + l1;
}

RealVector NonsmoothObjective::gradient(const RealVector& x) const {
  require_dim(*this, x);
  std::vector<double> g(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double d = x[i] - center_[i];
    g[i] = lambda_ * d + sign(d);
  }
  return RealVector(std::move(g));
}

LinearObjective::LinearObjective(RealVector coefficients)
    : Objective(linear_info(coefficients)),
      coefficients_(std::move(coefficients)) {}

double LinearObjective::value(const RealVector& x) const {
  require_dim(*this, x);
  return inner(coefficients_, x);
}

RealVector LinearObjective::gradient(const RealVector& x) const {
  require_dim(*this, x);
  return coefficients_;
}

std::shared_ptr<const QuadraticObjective> make_quadratic(
    RealVector center, RealVector eigenvalues) {
  return std::make_shared<const QuadraticObjective>(std::move(center),
                                                    std::move(eigenvalues));
}

std::shared_ptr<const HolderPowerObjective> make_holder_power(
    RealVector center, double nu) {
  return std::make_shared<const HolderPowerObjective>(std::move(center), nu);
}

std::shared_ptr<const NonsmoothObjective> make_nonsmooth(RealVector center,
                                                         double lambda) {
  return std::make_shared<const NonsmoothObjective>(std::move(center), lambda);
}

std::shared_ptr<const LinearObjective> make_linear(RealVector coefficients) {
  return std::make_shared<const LinearObjective>(std::move(coefficients));
}

namespace {

struct PairSampler {
  const Domain& domain;
  RealVector anchor;
  double radius;
  std::mt19937_64 rng;

  std::pair<RealVector, RealVector> next() {
    for (;;) {
      RealVector x = sample_point(domain, rng, anchor, radius);
      RealVector y = sample_point(domain, rng, anchor, radius);
      if (!(x == y)) return {std::move(x), std::move(y)};
    }
  }
};

PairSampler make_sampler(const Objective& obj, const Domain& domain,
                         std::uint64_t seed, double radius) {
  if (domain.dim() != obj.dim()) {
    throw ContractViolation("domain and objective dimensions differ");
  }
  RealVector anchor = obj.info().optimum_point.value_or(RealVector(obj.dim()));
  return PairSampler{domain, std::move(anchor), radius, std::mt19937_64(seed)};
}

}  // namespace

HolderReport verify_holder(const Objective& obj, double nu,
                           double holder_constant, const Domain& domain,
                           std::size_t n_samples, std::uint64_t seed,
                           double radius) {
  if (!(nu >= 0.0 && nu <= 1.0)) {
    throw ContractViolation("Hoelder exponent must lie in [0, 1]");
  }
  PairSampler sampler = make_sampler(obj, domain, seed, radius);
  HolderReport report;
  for (std::size_t k = 0; k < n_samples; ++k) {
    auto [x, y] = sampler.next();
    const double num = distance(obj.gradient(x), obj.gradient(y));
    const double den = std::pow(distance(x, y), nu);
    report.max_ratio = std::max(report.max_ratio, num / den);
  }
  report.samples = n_samples;
  report.pass = report.max_ratio <= holder_constant * (1.0 + 1e-6);
  return report;
}

InexactSmoothnessReport verify_inexact_smoothness(
    const Objective& obj, double nu, double holder_constant, double delta,
    const Domain& domain, std::size_t n_samples, std::uint64_t seed,
    double radius) {
  if (!(delta > 0.0)) throw ContractViolation("delta must be positive");
  if (!(nu >= 0.0 && nu <= 1.0)) {
    throw ContractViolation("Hoelder exponent must lie in [0, 1]");
  }
  const double smooth = std::pow(delta, (nu - 1.0) / (1.0 + nu)) *
                        std::pow(holder_constant, 2.0 / (1.0 + nu));
  PairSampler sampler = make_sampler(obj, domain, seed, radius);
  InexactSmoothnessReport report;
  report.effective_smoothness = smooth;
  report.worst_slack = kInf;
  report.worst_upper_slack = kInf;
  report.worst_cocoercive_slack = kInf;
  report.worst_bregman_slack = kInf;
  bool ok = true;
  // Relative round-off allowance on each comparison.
  auto holds = [](double lhs, double rhs) {
    return lhs <= rhs + 1e-9 * std::max(1.0, std::abs(rhs));
  };
  for (std::size_t k = 0; k < n_samples; ++k) {
    auto [x, y] = sampler.next();
    const double fx = obj.value(x);
    const double fy = obj.value(y);
    const RealVector gx = obj.gradient(x);
    const RealVector gy = obj.gradient(y);
    const double dx2 = squared_norm(x - y);
    const double dg2 = squared_norm(gx - gy);
    const double d_yx = bregman_divergence(fy, fx, gx, y, x);
    const double d_xy = bregman_divergence(fx, fy, gy, x, y);

    const double rhs_main = smooth * smooth * dx2 + 4.0 * smooth * delta;
    const double rhs_upper = 0.5 * smooth * dx2 + delta;
    const double rhs_coco = d_yx + delta;
    const double rhs_breg = 2.0 * smooth * d_xy + 2.0 * smooth * delta;
    const double lhs_coco = dg2 / (2.0 * smooth);

    report.worst_slack = std::min(report.worst_slack, rhs_main - dg2);
    report.worst_upper_slack =
        std::min(report.worst_upper_slack, rhs_upper - d_yx);
    report.worst_cocoercive_slack =
        std::min(report.worst_cocoercive_slack, rhs_coco - lhs_coco);
    report.worst_bregman_slack =
        std::min(report.worst_bregman_slack, rhs_breg - dg2);
    ok = ok && holds(dg2, rhs_main) && holds(d_yx, rhs_upper) &&
         holds(lhs_coco, rhs_coco) && holds(dg2, rhs_breg);
  }
  report.samples = n_samples;
  report.pass = ok;
  return report;
}

}  // namespace holderopt
