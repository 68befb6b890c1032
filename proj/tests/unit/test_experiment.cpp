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
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "holderopt/errors.hpp"
#include "holderopt/experiment.hpp"
#include "holderopt/metrics.hpp"
#include "json.hpp"

using namespace holderopt;
namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

const char* kHeader = "round,queries,subopt,regret_partial,eta,beta,accepted";

std::string quadratic_config(const std::string& algorithm,
                             const std::string& extra = "") {
  return "problem.family = quadratic\n"
         "problem.dimension = 3\n"
         "problem.center = 0.5,-0.3,0.2\n"
         "problem.eigenvalues = 1,4,9\n"
         "problem.domain.kind = ball\n"
         "problem.domain.radius = 1.5\n"
         "algorithm.name = " +
         algorithm + "\nbudget = 128\n" + extra;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() /
                       ("holderopt_test_" + name + "_" +
                        std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void check_close(const std::optional<double>& a, const Json& b) {
  if (!a) {
    CHECK(b.is_null());
    return;
  }
  REQUIRE(b.is_number());
  const double v = b.get<double>();
  CHECK(std::abs(*a - v) <= 1e-12 * std::max(1.0, std::abs(v)));
}

std::vector<std::string> run_configs() {
  return {
      quadratic_config("o2b_convex_universal"),
      quadratic_config("baseline_ogd"),
      quadratic_config("alg2_thm4", "algorithm.lambda = 1\n"),
      quadratic_config("alg2_cor1_known_L",
                       "algorithm.lambda = 1\nalgorithm.L = 9\n"),
      quadratic_config("alg2_cor1_unknown_L", "algorithm.lambda = 1\n"),
      "problem.family = quadratic\nproblem.dimension = 2\n"
      "problem.eigenvalues = 1,10\nproblem.center = 1,-1\n"
      "problem.domain.kind = all_space\nalgorithm.name = alg3_grid_search\n"
      "algorithm.x0 = 3,3\nbudget = 512\n",
      "problem.family = linear\nproblem.dimension = 2\n"
      "problem.sequence = adversarial_switch\nproblem.coefficients = 1,0.5\n"
      "algorithm.name = online_convex\nbudget = 200\n",
      "problem.family = quadratic\nproblem.dimension = 2\n"
      "problem.eigenvalues = 2\nproblem.center = 0.3,0.1\n"
      "problem.sequence = drifting_quadratic\nproblem.drift = 0.01\n"
      "algorithm.name = online_strongly_convex\nalgorithm.lambda = 2\n"
      "budget = 200\n",
      "problem.family = holder_power\nproblem.nu = 0.5\nproblem.dimension = 2\n"
      "problem.center = 0.2,0.2\nalgorithm.name = o2b_convex_universal\n"
      "oracle.mode = stochastic\noracle.sigma = 0.3\noracle.seed = 5\n"
      "budget = 300\noutput.stride = 7\n",
  };
}

}  // namespace

TEST_CASE("config errors are reported") {
  const std::vector<std::string> bad = {
      "budget = 10\n",
      quadratic_config("o2b_convex_universal", "bogus.key = 1\n"),
      quadratic_config("o2b_convex_universal", "budget = 20\n"),
      quadratic_config("no_such_algorithm"),
      quadratic_config("o2b_convex_universal", "oracle.sigma = abc\n"),
      quadratic_config("o2b_convex_universal", "oracle.mode = noisy\n"),
      quadratic_config("alg2_thm4"),
      quadratic_config("alg2_thm4",
                       "algorithm.lambda = 1\noracle.mode = stochastic\n"),
      quadratic_config("alg2_cor1_known_L",
                       "algorithm.lambda = 2\nalgorithm.L = 1\n"),
      quadratic_config("alg3_grid_search"),
      quadratic_config("o2b_convex_universal", "algorithm.x0 = 3,0,0\n"),
      quadratic_config("o2b_convex_universal", "problem.center = 1,2\n"),
      quadratic_config("o2b_convex_universal", "problem.sequence = fixed\n"
                                               "problem.drift = -1\n"
                                               "problem.family = cubic\n"),
      "problem.family = holder_power\nproblem.nu = 1.5\n"
      "algorithm.name = o2b_convex_universal\nbudget = 10\n",
      "problem.domain.kind = all_space\nalgorithm.name = o2b_convex_universal\n"
      "budget = 10\n",
      "algorithm.name = o2b_convex_universal\nbudget = 0\n",
      "algorithm.name o2b_convex_universal\nbudget = 10\n",
  };
  for (const auto& text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_config(text), ConfigError);
  }
  CHECK_THROWS_AS(load_config("/nonexistent/holderopt.cfg"), ConfigError);
}

TEST_CASE("defaults are filled and echoed") {
  const auto c = parse_config("algorithm.name = o2b_convex_universal\nbudget = 16\n");
  CHECK(c.family == "quadratic");
  CHECK(c.dimension == 1);
  CHECK(c.entries.at("algorithm.floor") == "1e-12");
  CHECK(c.entries.at("algorithm.x0") == "0");
  const auto again = parse_config(config_echo(c));
  CHECK(config_echo(again) == config_echo(c));
}

TEST_CASE("minimal run") {
  const auto c = parse_config(
      "# smallest useful config\nalgorithm.name = o2b_convex_universal\n"
      "problem.center = 0.25\nbudget = 16\n");
  const auto r = run_experiment(c);
  REQUIRE_FALSE(r.trace.rows.empty());
  CHECK(r.trace.rows.size() <= 16);
  CHECK(r.stats.total_queries <= 16);
  const Json j = Json::parse(r.summary_json);
  CHECK(j["algorithm"] == "o2b_convex_universal");
  CHECK(j["budget"] == 16);
  CHECK(j["config"]["budget"] == "16");
  const std::string csv = format_trace_csv(r.trace.rows);
  CHECK(csv.rfind(std::string(kHeader) + "\n", 0) == 0);
}

TEST_CASE("csv uses 17 digits and empty fields") {
  RunRow row;
  row.round = 3;
  row.queries = 5;
  row.subopt = 0.1;
  row.beta = 0.5;
  row.accepted = false;
  const std::string csv = format_trace_csv({row});
  CHECK(csv == std::string(kHeader) +
                   "\n3,5,0.10000000000000001,,,0.5,0\n");
  const auto back = parse_trace_csv(csv);
  REQUIRE(back.size() == 1);
  CHECK(*back[0].subopt == 0.1);
  CHECK_FALSE(back[0].eta);
  CHECK(*back[0].accepted == false);
}

TEST_CASE("csv round trip reproduces the summary") {
  for (const auto& text : run_configs()) {
    CAPTURE(text);
    const auto r = run_experiment(parse_config(text));
    const auto rows = parse_trace_csv(format_trace_csv(r.trace.rows));
    REQUIRE(rows.size() == r.trace.rows.size());
    const auto s = trace_statistics(rows);
    const Json j = Json::parse(r.summary_json);
    check_close(s.final_subopt, j["final_suboptimality"]);
    check_close(s.final_regret, j["final_regret"]);
    check_close(s.fitted_slope, j["fitted_slope"]);
    check_close(s.fitted_rate, j["fitted_rate"]);
    check_close(s.rate_r_squared, j["rate_r_squared"]);
    CHECK(j["total_queries"].get<std::size_t>() == s.total_queries);
    CHECK(s.total_queries <= r.config.budget);
  }
}

TEST_CASE("runs are reproducible from the echo") {
  for (const auto& text : run_configs()) {
    CAPTURE(text);
    const auto a = run_experiment(parse_config(text));
    const auto b = run_experiment(parse_config(text));
    CHECK(format_trace_csv(a.trace.rows) == format_trace_csv(b.trace.rows));
    const auto c = run_experiment(parse_config(config_echo(a.config)));
    CHECK(format_trace_csv(a.trace.rows) == format_trace_csv(c.trace.rows));
  }
}

TEST_CASE("row semantics per algorithm") {
  const auto o2b = run_experiment(parse_config(quadratic_config("o2b_convex_universal")));
  CHECK(o2b.trace.rounds == 64);
  CHECK(o2b.trace.total_queries == 127);
  for (const auto& row : o2b.trace.rows) {
    CHECK(row.subopt);
    CHECK(row.eta);
    CHECK_FALSE(row.beta);
  }
  const auto alg2 = run_experiment(
      parse_config(quadratic_config("alg2_thm4", "algorithm.lambda = 1\n")));
  CHECK(alg2.trace.rows.front().queries == 1);
  CHECK(alg2.trace.rows.back().queries == 128);
  for (std::size_t i = 1; i < alg2.trace.rows.size(); ++i) {
    CHECK(alg2.trace.rows[i].beta);
    CHECK(alg2.trace.rows[i].accepted);
  }
  const auto online = run_experiment(parse_config(run_configs()[6]));
  CHECK(online.trace.rows.size() == 200);
  CHECK(online.trace.rows.back().regret_partial);
  CHECK_FALSE(online.trace.rows.back().subopt);
}

TEST_CASE("outputs are written atomically") {
  const fs::path dir = scratch_dir("outputs");
  const auto c = parse_config(quadratic_config(
      "o2b_convex_universal", "output.trace_path = " + (dir / "t.csv").string() +
                                  "\noutput.summary_path = " +
                                  (dir / "s.json").string() + "\n"));
  write_outputs(run_experiment(c));
  CHECK(slurp(dir / "t.csv").rfind(kHeader, 0) == 0);
  CHECK(Json::parse(slurp(dir / "s.json")).is_object());
  write_file_atomic(dir / "t.csv", "replaced\n");
  CHECK(slurp(dir / "t.csv") == "replaced\n");
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    (void)e;
    ++files;
  }
  CHECK(files == 2);
  CHECK_THROWS_AS(write_file_atomic(dir / "t.csv" / "x.txt", "x"), IoError);
  write_file_atomic(dir / "nested" / "x.txt", "x");
  CHECK(slurp(dir / "nested" / "x.txt") == "x");
  fs::remove_all(dir);
}

TEST_CASE("sweep aggregates per budget") {
  const fs::path dir = scratch_dir("sweep");
  const auto c = parse_config(quadratic_config(
      "o2b_convex_universal", "output.trace_path = " + (dir / "t.csv").string() +
                                  "\noutput.summary_path = " +
                                  (dir / "s.json").string() + "\n"));
  const std::vector<std::size_t> budgets{32, 64, 128, 256, 512, 1024};
  const auto one = run_sweep(c, budgets, 1);
  const auto four = run_sweep(c, budgets, 4);
  CHECK(one.finals == four.finals);
  REQUIRE(one.slope);
  CHECK(*one.slope == loglog_slope(one.budgets, one.finals));
  CHECK(*one.slope <= -1.8);
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    CHECK(one.runs[i].config.budget == budgets[i]);
    CHECK(one.runs[i].config.trace_path ==
          dir / ("t_T" + std::to_string(budgets[i]) + ".csv"));
  }
  const Json agg = Json::parse(one.aggregate_json);
  CHECK(agg["budgets"].size() == budgets.size());
  CHECK(agg["summaries"][0] == (dir / "s_T32.json").string());
  fs::remove_all(dir);
}

TEST_CASE("budget paths and thread cap") {
  CHECK(budget_path("out/trace.csv", 64) == fs::path("out/trace_T64.csv"));
  CHECK(budget_path("", 64).empty());
  ::setenv("HOLDEROPT_THREADS", "3", 1);
  CHECK(sweep_thread_cap() == 3);
  ::setenv("HOLDEROPT_THREADS", "0", 1);
  CHECK(sweep_thread_cap() >= 1);
  ::unsetenv("HOLDEROPT_THREADS");
  CHECK(sweep_thread_cap() >= 1);
}
