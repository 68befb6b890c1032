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

#ifndef HOLDEROPT_ONLINE_SEQUENCE_HPP_
#define HOLDEROPT_ONLINE_SEQUENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "holderopt/objective.hpp"

namespace holderopt {

enum class SequenceFamily {
  kFixed,              // f_t = f for every t
  kDriftingLinear,     // f_t(x) = <c_t, x>, |c_t - c_{t-1}| = drift
  kDriftingQuadratic,  // common diagonal Hessian, center moves by drift
  kAdversarialSwitch,  // alternates <a, x> and <b, x>
};

std::string_view to_string(SequenceFamily family);
std::optional<SequenceFamily> parse_sequence_family(std::string_view name);

struct SequenceParams {
  std::size_t horizon = 1;
  ObjectivePtr base;          // kFixed
  RealVector coefficients;    // start c_0 (drifting_linear) or a (switch)
  std::optional<RealVector> second;  // b for kAdversarialSwitch, default -a
  RealVector center;          // start center (drifting_quadratic)
  RealVector eigenvalues;     // drifting_quadratic
  double drift = 0.0;
  // Deterministic step direction; when absent each step takes a fresh
  // uniformly random unit direction drawn from the seed.
  std::optional<RealVector> drift_direction;
};

// Pre-generated sequence of convex losses f_1..f_T. Immutable.
class OnlineSequence {
 public:
  SequenceFamily family() const { return family_; }
  std::size_t horizon() const { return functions_.size(); }
  std::size_t dim() const { return functions_.front()->dim(); }

  // 1-based round index.
  const Objective& at(std::size_t t) const;
  const ObjectivePtr& at_ptr(std::size_t t) const;

  // True when grad f_t - grad f_{t-1} does not depend on x, so the sup in
  // the gradient variation is attained everywhere.
  bool constant_gradient_differences() const;

  // Per-round coefficients for the linear families (index t - 1).
  const std::vector<RealVector>& linear_coefficients() const {
    return coefficients_;
  }
  // Per-round centers for drifting_quadratic (index t - 1).
  const std::vector<RealVector>& centers() const { return centers_; }
  const RealVector& eigenvalues() const { return eigenvalues_; }

 private:
  friend OnlineSequence make_online_sequence(SequenceFamily, SequenceParams,
                                             std::uint64_t);
  SequenceFamily family_ = SequenceFamily::kFixed;
  std::vector<ObjectivePtr> functions_;
  std::vector<RealVector> coefficients_;
  std::vector<RealVector> centers_;
  RealVector eigenvalues_;
};

OnlineSequence make_online_sequence(SequenceFamily family,
                                    SequenceParams params, std::uint64_t seed);

}  // namespace holderopt

#endif  // HOLDEROPT_ONLINE_SEQUENCE_HPP_
