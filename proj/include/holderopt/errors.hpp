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

#ifndef HOLDEROPT_ERRORS_HPP_
#define HOLDEROPT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace holderopt {

// Base of every exception thrown by the library. The C API maps each
// subclass onto a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a precondition: mismatched dimensions, invalid parameters,
// out-of-order calls on a stateful learner.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// An experiment configuration could not be parsed or validated.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// The gradient oracle has no queries left.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

// A Bregman divergence came out clearly negative: either the objective is
// not convex or its gradient is inconsistent with its value.
class ConvexityViolation : public Error {
 public:
  using Error::Error;
};

// A computation produced NaN or infinity where a finite value is required.
class NumericError : public Error {
 public:
  using Error::Error;
};

// File output failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace holderopt

#endif  // HOLDEROPT_ERRORS_HPP_
