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

#ifndef HOLDEROPT_PROBLEMS_HPP_
#define HOLDEROPT_PROBLEMS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "holderopt/domain.hpp"
#include "holderopt/objective.hpp"

namespace holderopt {

// 1/2 sum_i e_i (x_i - c_i)^2 with sorted positive eigenvalues e.
class QuadraticObjective final : public Objective {
 public:
  QuadraticObjective(RealVector center, RealVector eigenvalues);

  std::string_view name() const override { return "quadratic"; }
  std::size_t dim() const override { return center_.dim(); }
  double value(const RealVector& x) const override;
  RealVector gradient(const RealVector& x) const override;

  const RealVector& center() const { return center_; }
  const RealVector& eigenvalues() const { return eigenvalues_; }

 private:
  RealVector center_;
  RealVector eigenvalues_;
};

// |x - c|^(1 + nu) / (1 + nu), gradient |x - c|^(nu - 1) (x - c).
class HolderPowerObjective final : public Objective {
 public:
  HolderPowerObjective(RealVector center, double nu);

  std::string_view name() const override { return "holder_power"; }
  std::size_t dim() const override { return center_.dim(); }
  double value(const RealVector& x) const override;
  RealVector gradient(const RealVector& x) const override;

  const RealVector& center() const { return center_; }
  double exponent() const { return nu_; }

 private:
  RealVector center_;
  double nu_;
};

// (lambda/2)|x - c|^2 + |x - c|_1 with the subgradient sign(0) = 0.
class NonsmoothObjective final : public Objective {
 public:
  NonsmoothObjective(RealVector center, double lambda);

  std::string_view name() const override { return "nonsmooth"; }
  std::size_t dim() const override { return center_.dim(); }
  double value(const RealVector& x) const override;
  RealVector gradient(const RealVector& x) const override;

  const RealVector& center() const { return center_; }
  double lambda() const { return lambda_; }

 private:
  RealVector center_;
  double lambda_;
};

// <c, x>. Used as an online loss; has no minimizer over all space.
class LinearObjective final : public Objective {
 public:
  explicit LinearObjective(RealVector coefficients);

  std::string_view name() const override { return "linear"; }
  std::size_t dim() const override { return coefficients_.dim(); }
  double value(const RealVector& x) const override;
  RealVector gradient(const RealVector& x) const override;

  const RealVector& coefficients() const { return coefficients_; }

 private:
  RealVector coefficients_;
};

std::shared_ptr<const QuadraticObjective> make_quadratic(
    RealVector center, RealVector eigenvalues);
std::shared_ptr<const HolderPowerObjective> make_holder_power(
    RealVector center, double nu);
std::shared_ptr<const NonsmoothObjective> make_nonsmooth(RealVector center,
                                                         double lambda);
std::shared_ptr<const LinearObjective> make_linear(RealVector coefficients);

struct HolderReport {
  double max_ratio = 0.0;  // max |g(x) - g(y)| / |x - y|^nu over samples
  std::size_t samples = 0;
  bool pass = false;
};

// Samples pairs from `domain` (all_space: the ball of `radius` around the
// objective's optimum, or the origin) and checks the Hoelder condition with
// relative slack 1e-6.
HolderReport verify_holder(const Objective& obj, double nu, double holder_constant,
                           const Domain& domain, std::size_t n_samples,
                           std::uint64_t seed, double radius = 4.0);

struct InexactSmoothnessReport {
  double effective_smoothness = 0.0;  // delta^((nu-1)/(1+nu)) L_nu^(2/(1+nu))
  // min over samples of rhs - lhs of each inequality (>= 0 means it held).
  double worst_slack = 0.0;           // |dg|^2 <= L^2 |dx|^2 + 4 L delta
  double worst_upper_slack = 0.0;     // D(y, x) <= L/2 |dx|^2 + delta
  double worst_cocoercive_slack = 0.0;  // |dg|^2 / (2L) <= D(y, x) + delta
  double worst_bregman_slack = 0.0;   // |dg|^2 <= 2L D(x, y) + 2L delta
  std::size_t samples = 0;
  bool pass = false;
};

// Checks the inexact-smoothness consequence of Hoelder smoothness together
// with the three intermediate inequalities it is assembled from.
InexactSmoothnessReport verify_inexact_smoothness(
    const Objective& obj, double nu, double holder_constant, double delta,
    const Domain& domain, std::size_t n_samples, std::uint64_t seed,
    double radius = 4.0);

}  // namespace holderopt

#endif  // HOLDEROPT_PROBLEMS_HPP_
