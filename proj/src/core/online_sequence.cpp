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

#include "holderopt/online_sequence.hpp"

#include <cmath>
#include <random>
#include <string>

#include "holderopt/errors.hpp"
#include "holderopt/problems.hpp"

namespace holderopt {

std::string_view to_string(SequenceFamily family) {
  switch (family) {
    case SequenceFamily::kFixed:
      return "fixed";
    case SequenceFamily::kDriftingLinear:
      return "drifting_linear";
    case SequenceFamily::kDriftingQuadratic:
      return "drifting_quadratic";
    case SequenceFamily::kAdversarialSwitch:
      return "adversarial_switch";
  }
  return "unknown";
}

std::optional<SequenceFamily> parse_sequence_family(std::string_view name) {
  if (name == "fixed") return SequenceFamily::kFixed;
  if (name == "drifting_linear") return SequenceFamily::kDriftingLinear;
  if (name == "drifting_quadratic") return SequenceFamily::kDriftingQuadratic;
  if (name == "adversarial_switch") return SequenceFamily::kAdversarialSwitch;
  return std::nullopt;
}

const Objective& OnlineSequence::at(std::size_t t) const {
  return *at_ptr(t);
}

const ObjectivePtr& OnlineSequence::at_ptr(std::size_t t) const {
  if (t == 0 || t > functions_.size()) {
    throw ContractViolation("round " + std::to_string(t) +
                            " outside sequence horizon " +
                            std::to_string(functions_.size()));
  }
  return functions_[t - 1];
}

bool OnlineSequence::constant_gradient_differences() const {
  // Fixed: differences vanish. Linear: gradients are constant. Drifting
  // quadratic: E(c_{t-1} - c_t) is constant in x.
  return true;
}

namespace {

class DriftWalk {
 public:
  DriftWalk(std::size_t dim, double drift,
            const std::optional<RealVector>& direction, std::uint64_t seed)
      : dim_(dim), drift_(drift), rng_(seed) {
    if (!(drift >= 0.0) || !std::isfinite(drift)) {
      throw ContractViolation("drift must be finite and >= 0");
    }
    if (direction) {
      if (direction->dim() != dim) {
        throw ContractViolation("drift direction dimension mismatch");
      }
      const double n = norm(*direction);
      if (n == 0.0) throw ContractViolation("drift direction must be nonzero");
      direction_ = *direction / n;
    }
  }

  RealVector step() {
    if (direction_) return drift_ * *direction_;
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> u(dim_);
    double n = 0.0;
    while (n == 0.0) {
      for (double& v : u) v = gauss(rng_);
      n = 0.0;
      for (double v : u) n += v * v;
      n = std::sqrt(n);
    }
    for (double& v : u) v *= drift_ / n;
    return RealVector(std::move(u));
  }

 private:
  std::size_t dim_;
  double drift_;
  std::optional<RealVector> direction_;
  std::mt19937_64 rng_;
};

}  // namespace

OnlineSequence make_online_sequence(SequenceFamily family,
                                    SequenceParams params, std::uint64_t seed) {
  if (params.horizon == 0) throw ContractViolation("horizon must be >= 1");
  OnlineSequence seq;
  seq.family_ = family;
  const std::size_t horizon = params.horizon;
  seq.functions_.reserve(horizon);

  switch (family) {
    case SequenceFamily::kFixed: {
      if (!params.base) {
        throw ContractViolation("fixed sequence needs a base objective");
      }
      seq.functions_.assign(horizon, params.base);
      if (const auto* lin =
              dynamic_cast<const LinearObjective*>(params.base.get())) {
        seq.coefficients_.assign(horizon, lin->coefficients());
      }
      break;
    }
    case SequenceFamily::kDriftingLinear: {
      if (params.coefficients.empty()) {
        throw ContractViolation("drifting_linear needs start coefficients");
      }
      DriftWalk walk(params.coefficients.dim(), params.drift,
                     params.drift_direction, seed);
      RealVector c = params.coefficients;
      for (std::size_t t = 1; t <= horizon; ++t) {
        c += walk.step();
        seq.coefficients_.push_back(c);
        seq.functions_.push_back(make_linear(c));
      }
      break;
    }
    case SequenceFamily::kDriftingQuadratic: {
      if (params.center.empty()) {
        throw ContractViolation("drifting_quadratic needs a start center");
      }
      DriftWalk walk(params.center.dim(), params.drift, params.drift_direction,
                     seed);
      // Validates the eigenvalues once.
      (void)make_quadratic(params.center, params.eigenvalues);
      seq.eigenvalues_ = params.eigenvalues;
      RealVector c = params.center;
      for (std::size_t t = 1; t <= horizon; ++t) {
        c += walk.step();
        seq.centers_.push_back(c);
        seq.functions_.push_back(make_quadratic(c, params.eigenvalues));
      }
      break;
    }
    case SequenceFamily::kAdversarialSwitch: {
      if (params.coefficients.empty()) {
        throw ContractViolation("adversarial_switch needs coefficients");
      }
      const RealVector a = params.coefficients;
      const RealVector b = params.second.value_or(-a);
      require_same_dim(a, b);
      const ObjectivePtr fa = make_linear(a);
      const ObjectivePtr fb = make_linear(b);
      for (std::size_t t = 1; t <= horizon; ++t) {
        const bool odd = (t % 2) == 1;
        seq.coefficients_.push_back(odd ? a : b);
        seq.functions_.push_back(odd ? fa : fb);
      }
      break;
    }
  }
  return seq;
}

}  // namespace holderopt
