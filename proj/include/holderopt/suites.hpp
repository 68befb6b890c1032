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

#ifndef HOLDEROPT_SUITES_HPP_
#define HOLDEROPT_SUITES_HPP_

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace holderopt {

struct CriterionReport {
  int id = 0;
  std::string name;
  bool pass = false;
  std::map<std::string, double> measures;
  std::string detail;
};

// One line: "criterion <id> <name>: PASS|FAIL k=v ...".
std::string format_report(const CriterionReport& report);

CriterionReport criterion_convex_smooth();          // 1
CriterionReport criterion_convex_holder();          // 2
CriterionReport criterion_convex_nonsmooth();       // 3
CriterionReport criterion_stochastic_floor();       // 4
CriterionReport criterion_strongly_convex_rate();   // 5
CriterionReport criterion_strongly_convex_nonsmooth();  // 6
CriterionReport criterion_grid_search();            // 7
CriterionReport criterion_online_convex();          // 8
CriterionReport criterion_online_strongly_convex(); // 9
CriterionReport criterion_certificates();           // 10

const std::vector<std::string>& suite_names();

// Runs the named suite, calling `sink` after each criterion. Throws
// ConfigError for an unknown suite.
std::vector<CriterionReport> run_suite(
    std::string_view name,
    const std::function<void(const CriterionReport&)>& sink = {});

}  // namespace holderopt

#endif  // HOLDEROPT_SUITES_HPP_
