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

// Command-line front end over the C API.
//
//   holderopt run --config PATH
//   holderopt suite NAME
//   holderopt sweep --config PATH --budgets 32,64,...
//
// Exit codes: 0 success, 1 criterion failure, 2 configuration or usage
// error, 3 any other runtime failure.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holderopt/holderopt.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCriterion = 1;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

int report_failure(holderopt_status status) {
  std::fprintf(stderr, "error: %s: %s\n", holderopt_status_name(status),
               holderopt_last_error());
  switch (status) {
    case HOLDEROPT_CONFIG:
    case HOLDEROPT_INVALID_ARGUMENT:
      return kExitConfig;
    case HOLDEROPT_CRITERION:
      return kExitCriterion;
    default:
      return kExitRuntime;
  }
}

void print_and_free(char* text) {
  if (text) {
    std::fputs(text, stdout);
    holderopt_string_free(text);
  }
}

int cmd_run(const std::string& config_path) {
  holderopt_experiment* exp = nullptr;
  holderopt_status st = holderopt_experiment_load(config_path.c_str(), &exp);
  if (st != HOLDEROPT_OK) return report_failure(st);
  char* summary = nullptr;
  st = holderopt_experiment_run(exp, 1, &summary);
  holderopt_experiment_free(exp);
  if (st != HOLDEROPT_OK) return report_failure(st);
  print_and_free(summary);
  return kExitOk;
}

int cmd_sweep(const std::string& config_path,
              const std::vector<std::size_t>& budgets) {
  holderopt_experiment* exp = nullptr;
  holderopt_status st = holderopt_experiment_load(config_path.c_str(), &exp);
  if (st != HOLDEROPT_OK) return report_failure(st);
  char* aggregate = nullptr;
  st = holderopt_experiment_sweep(exp, budgets.data(), budgets.size(), 0, 1,
                                  &aggregate);
  holderopt_experiment_free(exp);
  if (st != HOLDEROPT_OK) return report_failure(st);
  print_and_free(aggregate);
  return kExitOk;
}

void print_line(int, int, const char* line, void*) {
  std::printf("%s\n", line);
  std::fflush(stdout);
}

int cmd_suite(const std::string& name) {
  std::size_t failures = 0;
  const holderopt_status st =
      holderopt_suite_run(name.c_str(), print_line, nullptr, &failures);
  if (st == HOLDEROPT_CRITERION) {
    std::printf("suite %s: %zu criterion failure(s)\n", name.c_str(),
                failures);
    return kExitCriterion;
  }
  if (st != HOLDEROPT_OK) return report_failure(st);
  std::printf("suite %s: all criteria passed\n", name.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gradient-variation online learning and online-to-batch "
               "optimizers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(holderopt_version()));

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run one experiment");
  run->add_option("--config", config_path, "key=value config file")
      ->required();

  std::string suite_name;
  auto* suite = app.add_subcommand("suite", "Run a verification suite");
  std::string suites;
  for (std::size_t i = 0; i < holderopt_suite_count(); ++i) {
    suites += std::string(i ? ", " : "") + holderopt_suite_name(i);
  }
  suite->add_option("name", suite_name, "One of: " + suites)->required();

  std::vector<std::size_t> budgets;
  auto* sweep = app.add_subcommand(
      "sweep", "Run one experiment per budget (HOLDEROPT_THREADS caps "
               "parallelism)");
  sweep->add_option("--config", config_path, "key=value config file")
      ->required();
  sweep->add_option("--budgets", budgets, "Comma-separated budgets")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: usage: %s\n", e.what());
    return kExitConfig;
  }

  if (*run) return cmd_run(config_path);
  if (*suite) return cmd_suite(suite_name);
  return cmd_sweep(config_path, budgets);
}
