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

#ifndef HOLDEROPT_EXPERIMENT_HPP_
#define HOLDEROPT_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holderopt/domain.hpp"
#include "holderopt/metrics.hpp"
#include "holderopt/oracle.hpp"

namespace holderopt {

enum class Algorithm {
  kOnlineConvex,
  kOnlineStronglyConvex,
  kO2bConvexUniversal,
  kAlg2Thm4,
  kAlg2Cor1KnownL,
  kAlg2Cor1UnknownL,
  kAlg3GridSearch,
  kBaselineOgd,
};

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

// Parsed flat key=value configuration. `entries` holds every key exactly as
// read, after defaults are filled in, and is what the summary echoes.
struct ExperimentConfig {
  std::map<std::string, std::string> entries;

  std::string family;
  std::size_t dimension = 1;
  RealVector center;
  RealVector eigenvalues;
  RealVector coefficients;
  std::optional<RealVector> second;
  double nu = 1.0;
  double problem_lambda = 0.0;
  std::string sequence;
  double drift = 0.0;
  std::optional<RealVector> direction;
  Domain domain = Domain::all_space(1);

  Algorithm algorithm = Algorithm::kO2bConvexUniversal;
  std::optional<double> lambda;
  std::optional<double> smoothness;
  RealVector x0;
  double floor = 1e-12;

  std::size_t budget = 0;
  OracleOptions oracle;

  std::filesystem::path trace_path;
  std::filesystem::path summary_path;
  std::size_t stride = 1;
};

// Throws ConfigError carrying a one-line reason.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

// Canonical key=value text that reproduces the configuration.
std::string config_echo(const ExperimentConfig& config);

// Same configuration with a different budget.
ExperimentConfig with_budget(const ExperimentConfig& config,
                             std::size_t budget);

struct TraceStatistics {
  std::optional<double> final_subopt;
  std::optional<double> final_regret;
  std::size_t total_queries = 0;
  std::size_t rounds = 0;
  std::optional<double> fitted_slope;  // log-log of subopt (or regret) vs x
  std::optional<double> fitted_rate;   // geometric rate of subopt vs queries
  std::optional<double> rate_r_squared;
};

// Statistics recomputable from the emitted rows alone.
TraceStatistics trace_statistics(const std::vector<RunRow>& rows);

struct ExperimentResult {
  ExperimentConfig config;
  RunTrace trace;
  TraceStatistics stats;
  std::optional<double> optimum_value;
  bool optimum_exact = true;
  bool nonconvergent = false;
  double wall_time_seconds = 0.0;
  std::string summary_json;
};

// Runs without touching the filesystem.
ExperimentResult run_experiment(const ExperimentConfig& config);

// 17 significant digits, empty for absent fields.
std::string format_trace_csv(const std::vector<RunRow>& rows);
std::vector<RunRow> parse_trace_csv(std::string_view text);

// Writes `content` to a temporary sibling then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

// Writes the trace and summary files named by the config (if any).
void write_outputs(const ExperimentResult& result);

struct SweepResult {
  std::vector<ExperimentResult> runs;  // ordered as the budgets
  std::vector<double> budgets;
  std::vector<double> finals;
  std::optional<double> slope;
  std::string aggregate_json;
};

// Runs one experiment per budget on up to `threads` worker threads.
SweepResult run_sweep(const ExperimentConfig& config,
                      const std::vector<std::size_t>& budgets,
                      std::size_t threads);

// HOLDEROPT_THREADS if set and positive, else the hardware concurrency.
std::size_t sweep_thread_cap();

// Output path for one budget of a sweep: "trace.csv" -> "trace_T64.csv".
std::filesystem::path budget_path(const std::filesystem::path& path,
                                  std::size_t budget);

}  // namespace holderopt

#endif  // HOLDEROPT_EXPERIMENT_HPP_
