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

#include "holderopt/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "holderopt/conversion.hpp"
#include "holderopt/errors.hpp"
#include "holderopt/online_learners.hpp"
#include "holderopt/online_sequence.hpp"
#include "holderopt/problems.hpp"
#include "holderopt/strongly_convex.hpp"
#include "json.hpp"

namespace holderopt {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kAlgorithmNames[] = {
    "online_convex",       "online_strongly_convex", "o2b_convex_universal",
    "alg2_thm4",           "alg2_cor1_known_L",      "alg2_cor1_unknown_L",
    "alg3_grid_search",    "baseline_ogd",
};

const std::set<std::string, std::less<>> kKnownKeys = {
    "problem.family",        "problem.dimension",     "problem.center",
    "problem.eigenvalues",   "problem.coefficients",  "problem.second",
    "problem.nu",            "problem.lambda",        "problem.sequence",
    "problem.drift",         "problem.direction",     "problem.domain.kind",
    "problem.domain.center", "problem.domain.radius", "problem.domain.lower",
    "problem.domain.upper",  "algorithm.name",        "algorithm.lambda",
    "algorithm.L",           "algorithm.x0",          "algorithm.floor",
    "budget",                "oracle.mode",           "oracle.sigma",
    "oracle.seed",           "output.trace_path",     "output.summary_path",
    "output.stride",
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Shortest decimal that reads back to the same double.
std::string format_short(double v) {
  char buf[32];
  for (int digits = 1; digits <= 17; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string format_vector(const RealVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ',';
    out += format_short(v[i]);
  }
  return out;
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE ||
      !std::isfinite(v)) {
    throw ConfigError(key + ": expected a finite number, got '" + text + "'");
  }
  return v;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
    throw ConfigError(key + ": expected a non-negative integer, got '" + text +
                      "'");
  }
  errno = 0;
  const unsigned long long v = std::strtoull(t.c_str(), nullptr, 10);
  if (errno == ERANGE) throw ConfigError(key + ": integer out of range");
  return v;
}

std::vector<double> parse_list(const std::string& key,
                               const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, item));
  if (out.empty()) throw ConfigError(key + ": expected a comma-separated list");
  return out;
}

class Reader {
 public:
  explicit Reader(std::map<std::string, std::string>& entries)
      : entries_(entries) {}

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::string text(const std::string& key, const std::string& fallback) {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      entries_[key] = fallback;
      return fallback;
    }
    return it->second;
  }

  double number(const std::string& key, double fallback) {
    if (!has(key)) entries_[key] = format_short(fallback);
    return parse_double(key, entries_[key]);
  }

  std::optional<double> optional_number(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return parse_double(key, entries_[key]);
  }

  std::uint64_t integer(const std::string& key, std::uint64_t fallback) {
    if (!has(key)) entries_[key] = std::to_string(fallback);
    return parse_unsigned(key, entries_[key]);
  }

  std::string required(const std::string& key) {
    if (!has(key)) throw ConfigError("missing required key " + key);
    return entries_[key];
  }

  // Length-1 lists broadcast to `dim`.
  RealVector vector(const std::string& key, std::size_t dim,
                    double fallback) {
    if (!has(key)) {
      const RealVector v(dim, fallback);
      entries_[key] = format_vector(v);
      return v;
    }
    return sized(key, dim);
  }

  std::optional<RealVector> optional_vector(const std::string& key,
                                            std::size_t dim) {
    if (!has(key)) return std::nullopt;
    return sized(key, dim);
  }

  std::size_t list_length(const std::string& key) {
    return has(key) ? parse_list(key, entries_[key]).size() : 0;
  }

 private:
  RealVector sized(const std::string& key, std::size_t dim) {
    std::vector<double> v = parse_list(key, entries_[key]);
    if (v.size() == 1 && dim > 1) v.assign(dim, v.front());
    if (v.size() != dim) {
      throw ConfigError(key + ": expected " + std::to_string(dim) +
                        " entries, got " + std::to_string(v.size()));
    }
    return RealVector(std::move(v));
  }

  std::map<std::string, std::string>& entries_;
};

bool is_online(Algorithm a) {
  return a == Algorithm::kOnlineConvex || a == Algorithm::kOnlineStronglyConvex;
}

bool is_guess_check(Algorithm a) {
  return a == Algorithm::kAlg2Thm4 || a == Algorithm::kAlg2Cor1KnownL ||
         a == Algorithm::kAlg2Cor1UnknownL;
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  return kAlgorithmNames[static_cast<std::size_t>(algorithm)];
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kAlgorithmNames); ++i) {
    if (kAlgorithmNames[i] == name) return static_cast<Algorithm>(i);
  }
  return std::nullopt;
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig config;
  auto& entries = config.entries;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key=value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (!kKnownKeys.count(key)) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key " +
                        key);
    }
    if (!entries.emplace(key, value).second) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": duplicate key " + key);
    }
  }

  Reader r(entries);
  const std::string algo_name = r.required("algorithm.name");
  const auto algo = parse_algorithm(algo_name);
  if (!algo) throw ConfigError("algorithm.name: unknown algorithm " + algo_name);
  config.algorithm = *algo;

  const std::uint64_t budget = parse_unsigned("budget", r.required("budget"));
  if (budget == 0) throw ConfigError("budget: must be positive");
  config.budget = budget;

  std::size_t dim = 0;
  if (r.has("problem.dimension")) {
    dim = r.integer("problem.dimension", 1);
    if (dim == 0) throw ConfigError("problem.dimension: must be positive");
  } else {
    for (const char* key :
         {"problem.center", "problem.eigenvalues", "problem.coefficients",
          "problem.second", "problem.direction", "problem.domain.center",
          "problem.domain.lower", "problem.domain.upper", "algorithm.x0"}) {
      dim = std::max(dim, r.list_length(key));
    }
    dim = std::max<std::size_t>(dim, 1);
    r.integer("problem.dimension", dim);
  }
  config.dimension = dim;

  config.family = r.text("problem.family", "quadratic");
  config.sequence = r.text("problem.sequence", "fixed");
  config.center = r.vector("problem.center", dim, 0.0);
  config.eigenvalues = r.vector("problem.eigenvalues", dim, 1.0);
  config.coefficients = r.vector("problem.coefficients", dim, 1.0);
  config.second = r.optional_vector("problem.second", dim);
  config.nu = r.number("problem.nu", 1.0);
  config.problem_lambda = r.number("problem.lambda", 0.0);
  config.drift = r.number("problem.drift", 0.0);
  config.direction = r.optional_vector("problem.direction", dim);

  const std::string kind = r.text("problem.domain.kind", "ball");
  try {
    if (kind == "ball") {
      config.domain =
          Domain::ball(r.vector("problem.domain.center", dim, 0.0),
                       r.number("problem.domain.radius", 1.0));
    } else if (kind == "box") {
      if (!r.has("problem.domain.lower") || !r.has("problem.domain.upper")) {
        throw ConfigError("box domain needs problem.domain.lower and .upper");
      }
      config.domain = Domain::box(r.vector("problem.domain.lower", dim, 0.0),
                                  r.vector("problem.domain.upper", dim, 0.0));
    } else if (kind == "all_space") {
      config.domain = Domain::all_space(dim);
    } else {
      throw ConfigError("problem.domain.kind: unknown kind " + kind);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("problem.domain: ") + e.what());
  }

  config.lambda = r.optional_number("algorithm.lambda");
  config.smoothness = r.optional_number("algorithm.L");
  if (r.has("algorithm.x0")) {
    config.x0 = r.vector("algorithm.x0", dim, 0.0);
  } else {
    config.x0 = config.domain.center();
    entries["algorithm.x0"] = format_vector(config.x0);
  }
  config.floor = r.number("algorithm.floor", 1e-12);

  const std::string mode = r.text("oracle.mode", "deterministic");
  if (mode == "deterministic") {
    config.oracle.mode = NoiseMode::kDeterministic;
  } else if (mode == "stochastic") {
    config.oracle.mode = NoiseMode::kStochastic;
  } else {
    throw ConfigError("oracle.mode: expected deterministic or stochastic");
  }
  config.oracle.sigma = r.number("oracle.sigma", 0.0);
  config.oracle.seed = r.integer("oracle.seed", 0);

  config.trace_path = r.text("output.trace_path", "");
  config.summary_path = r.text("output.summary_path", "");
  config.stride = r.integer("output.stride", 1);

  // Validation.
  const Algorithm a = config.algorithm;
  static const std::set<std::string, std::less<>> families = {
      "quadratic", "holder_power", "nonsmooth", "linear"};
  if (!families.count(config.family)) {
    throw ConfigError("problem.family: unknown family " + config.family);
  }
  if (!parse_sequence_family(config.sequence)) {
    throw ConfigError("problem.sequence: unknown sequence " + config.sequence);
  }
  if (config.sequence != "fixed" && !is_online(a)) {
    throw ConfigError("problem.sequence: only online algorithms take a "
                      "non-fixed sequence");
  }
  if (config.stride == 0) throw ConfigError("output.stride: must be positive");
  if (config.oracle.sigma < 0.0) {
    throw ConfigError("oracle.sigma: must be non-negative");
  }
  if (!(config.floor > 0.0)) throw ConfigError("algorithm.floor: must be > 0");
  const bool stochastic = config.oracle.mode == NoiseMode::kStochastic;
  if (stochastic && (is_online(a) || is_guess_check(a) ||
                     a == Algorithm::kAlg3GridSearch)) {
    throw ConfigError("oracle.mode: " + algo_name +
                      " requires a deterministic oracle");
  }
  if ((a == Algorithm::kOnlineConvex || a == Algorithm::kO2bConvexUniversal ||
       a == Algorithm::kBaselineOgd) &&
      !config.domain.bounded()) {
    throw ConfigError(algo_name + " requires a domain with finite diameter");
  }
  if (a == Algorithm::kAlg3GridSearch &&
      config.domain.kind() != DomainKind::kAllSpace) {
    throw ConfigError("alg3_grid_search requires problem.domain.kind=all_space");
  }
  if (a == Algorithm::kAlg3GridSearch && config.budget < 2 * grid_size(
                                             std::max<std::size_t>(
                                                 config.budget, 2))) {
    throw ConfigError("budget: alg3_grid_search needs T >= 2 ceil(2 log2 T)");
  }
  if ((is_guess_check(a) || a == Algorithm::kOnlineStronglyConvex) &&
      !(config.lambda && *config.lambda > 0.0)) {
    throw ConfigError(algo_name + " requires algorithm.lambda > 0");
  }
  if (a == Algorithm::kAlg2Cor1KnownL &&
      !(config.smoothness && *config.smoothness >= *config.lambda)) {
    throw ConfigError("alg2_cor1_known_L requires algorithm.L >= lambda");
  }
  if (!config.domain.contains(config.x0, 1e-12)) {
    throw ConfigError("algorithm.x0: start point lies outside the domain");
  }
  if (config.family == "holder_power" && !(config.nu > 0.0 && config.nu <= 1.0)) {
    throw ConfigError("problem.nu: must lie in (0, 1]");
  }
  if (config.family == "linear" && !is_online(a) && !config.domain.bounded()) {
    throw ConfigError("linear objective has no minimizer on all space");
  }
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string config_echo(const ExperimentConfig& config) {
  std::string out;
  for (const auto& [key, value] : config.entries) {
    out += key + "=" + value + "\n";
  }
  return out;
}

std::filesystem::path budget_path(const std::filesystem::path& path,
                                  std::size_t budget) {
  if (path.empty()) return path;
  std::filesystem::path out = path.parent_path();
  out /= path.stem().string() + "_T" + std::to_string(budget) +
         path.extension().string();
  return out;
}

ExperimentConfig with_budget(const ExperimentConfig& config,
                             std::size_t budget) {
  if (budget == 0) throw ConfigError("budget: must be positive");
  ExperimentConfig out = config;
  out.budget = budget;
  out.entries["budget"] = std::to_string(budget);
  out.trace_path = budget_path(config.trace_path, budget);
  out.summary_path = budget_path(config.summary_path, budget);
  out.entries["output.trace_path"] = out.trace_path.string();
  out.entries["output.summary_path"] = out.summary_path.string();
  if (out.algorithm == Algorithm::kAlg3GridSearch &&
      (budget < 2 || budget < 2 * grid_size(budget))) {
    throw ConfigError("budget: alg3_grid_search needs T >= 2 ceil(2 log2 T)");
  }
  return out;
}

namespace {

ObjectivePtr make_problem(const ExperimentConfig& c) {
  if (c.family == "quadratic") return make_quadratic(c.center, c.eigenvalues);
  if (c.family == "holder_power") return make_holder_power(c.center, c.nu);
  if (c.family == "nonsmooth") {
    return make_nonsmooth(c.center, c.problem_lambda);
  }
  return make_linear(c.coefficients);
}

bool keep_row(std::size_t index, std::size_t stride) {
  return index % stride == 0;
}

void run_online_algorithm(const ExperimentConfig& c, ExperimentResult& res) {
  SequenceParams params;
  params.horizon = c.budget;
  params.base = make_problem(c);
  params.coefficients = c.coefficients;
  params.second = c.second;
  params.center = c.center;
  params.eigenvalues = c.eigenvalues;
  params.drift = c.drift;
  params.drift_direction = c.direction;
  const OnlineSequence seq = make_online_sequence(
      *parse_sequence_family(c.sequence), params, c.oracle.seed);
  OnlineRunOptions options;
  options.x_init = c.x0;
  options.floor = c.floor;
  options.stride = c.stride;
  const OnlineTrace trace =
      c.algorithm == Algorithm::kOnlineConvex
          ? run_online_convex(seq, c.domain, c.budget, options)
          : run_online_strongly_convex(seq, c.domain, *c.lambda, c.budget,
                                       options);
  ComparatorTracker tracker(seq, c.domain);
  std::size_t next = 0;
  bool exact = true;
  for (std::size_t t = 1; t <= trace.rounds; ++t) {
    tracker.advance();
    if (next < trace.records.size() && trace.records[next].round == t) {
      const auto& rec = trace.records[next++];
      const MinimumReport m = tracker.minimum();
      exact = exact && m.exact;
      RunRow row;
      row.round = t;
      row.queries = t;
      row.regret_partial = rec.cumulative_loss - m.value;
      row.eta = rec.eta;
      res.trace.rows.push_back(row);
    }
  }
  res.trace.final_point = trace.final_point;
  res.trace.rounds = trace.rounds;
  res.trace.total_queries = trace.rounds;
  res.trace.final_regret = res.trace.rows.back().regret_partial;
  res.optimum_exact = exact;
}

void run_conversion(const ExperimentConfig& c, ObjectivePtr obj,
                    ExperimentResult& res) {
  const MinimumReport opt = constrained_minimum(*obj, c.domain);
  res.optimum_value = opt.value;
  res.optimum_exact = opt.exact;
  UniversalConvexOptions options;
  options.x_init = c.x0;
  options.floor = c.floor;
  options.stride = c.stride;
  const ConversionTrace trace =
      c.algorithm == Algorithm::kO2bConvexUniversal
          ? universal_convex_optimize(obj, c.domain, c.budget, c.oracle,
                                      options)
          : baseline_ogd(obj, c.domain, c.budget, c.oracle, options);
  for (const auto& rec : trace.records) {
    RunRow row;
    row.round = rec.round;
    row.queries = rec.queries;
    row.subopt = rec.value - opt.value;
    row.regret_partial =
        rec.weighted_loss - inner(rec.weighted_gradient, opt.point);
    row.eta = rec.eta;
    res.trace.rows.push_back(row);
  }
  res.trace.final_point = trace.output;
  res.trace.final_value = trace.output_value;
  res.trace.final_subopt = trace.output_value - opt.value;
  res.trace.final_regret = res.trace.rows.back().regret_partial;
  res.trace.rounds = trace.rounds;
  res.trace.total_queries = trace.queries;
}

void append_guess_check_rows(const GuessCheckResult& run, double start_value,
                             double optimum, std::size_t stride,
                             std::vector<RunRow>& rows) {
  RunRow first;
  first.round = 1;
  first.queries = 1;
  first.subopt = start_value - optimum;
  rows.push_back(first);
  for (std::size_t i = 0; i < run.records.size(); ++i) {
    const auto& rec = run.records[i];
    if (!keep_row(rec.query, stride) && i + 1 != run.records.size()) continue;
    RunRow row;
    row.round = rec.iteration;
    row.queries = rec.query;
    row.subopt = rec.value - optimum;
    row.eta = rec.eta;
    row.beta = rec.beta;
    row.accepted = rec.accepted;
    rows.push_back(row);
  }
}

void run_guess_check(const ExperimentConfig& c, ObjectivePtr obj,
                     ExperimentResult& res) {
  const MinimumReport opt = constrained_minimum(*obj, c.domain);
  res.optimum_value = opt.value;
  res.optimum_exact = opt.exact;
  GuessCheckResult run;
  switch (c.algorithm) {
    case Algorithm::kAlg2Thm4:
      run = run_thm4(obj, c.domain, *c.lambda, c.budget, c.x0);
      break;
    case Algorithm::kAlg2Cor1KnownL:
      run = run_cor1_known_L(obj, c.domain, *c.lambda, *c.smoothness,
                             c.budget, c.x0);
      break;
    default:
      run = run_cor1_unknown_L(obj, c.domain, *c.lambda, c.budget, c.x0);
      break;
  }
  append_guess_check_rows(run, obj->value(c.x0), opt.value, c.stride,
                          res.trace.rows);
  res.trace.final_point = run.output;
  res.trace.final_value = run.output_value;
  res.trace.final_subopt = run.output_value - opt.value;
  res.trace.rounds = run.iterations;
  res.trace.total_queries = run.queries;
  res.nonconvergent = run.nonconvergent;
}

void run_grid(const ExperimentConfig& c, ObjectivePtr obj,
              ExperimentResult& res) {
  const MinimumReport opt = constrained_minimum(*obj, c.domain);
  res.optimum_value = opt.value;
  res.optimum_exact = opt.exact;
  const GridSearchResult grid = grid_search_run(obj, c.budget, c.x0);
  double best = obj->value(c.x0);
  std::size_t queries = grid.probe_queries;
  RunRow first;
  first.round = 0;
  first.queries = queries;
  first.subopt = best - opt.value;
  res.trace.rows.push_back(first);
  bool nonconvergent = true;
  for (std::size_t i = 0; i < grid.instances.size(); ++i) {
    const auto& run = grid.instances[i];
    queries += run.queries;
    best = std::min(best, run.output_value);
    nonconvergent = nonconvergent && run.nonconvergent;
    RunRow row;
    row.round = i + 1;
    row.queries = queries;
    row.subopt = best - opt.value;
    if (!run.records.empty()) row.eta = run.records.back().eta;
    row.beta = run.accepted_betas.empty() ? 1.0 : run.accepted_betas.back();
    res.trace.rows.push_back(row);
  }
  res.trace.final_point = grid.output;
  res.trace.final_value = grid.output_value;
  res.trace.final_subopt = grid.output_value - opt.value;
  res.trace.rounds = grid.instances.size();
  res.trace.total_queries = grid.queries;
  res.nonconvergent = nonconvergent;
}

Json optional_json(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

std::string build_summary(const ExperimentResult& res) {
  Json config = Json::object();
  for (const auto& [key, value] : res.config.entries) config[key] = value;
  Json j;
  j["config"] = config;
  j["algorithm"] = std::string(to_string(res.config.algorithm));
  j["budget"] = res.config.budget;
  j["rounds"] = res.trace.rounds;
  j["total_queries"] = res.stats.total_queries;
  j["final_suboptimality"] = optional_json(res.stats.final_subopt);
  j["final_regret"] = optional_json(res.stats.final_regret);
  j["final_value"] = optional_json(res.trace.final_value);
  j["optimum_value"] = optional_json(res.optimum_value);
  j["optimum_exact"] = res.optimum_exact;
  j["fitted_slope"] = optional_json(res.stats.fitted_slope);
  j["fitted_rate"] = optional_json(res.stats.fitted_rate);
  j["rate_r_squared"] = optional_json(res.stats.rate_r_squared);
  j["nonconvergent"] = res.nonconvergent;
  j["final_point"] = std::vector<double>(res.trace.final_point.begin(),
                                         res.trace.final_point.end());
  j["wall_time_seconds"] = res.wall_time_seconds;
  return j.dump(2) + "\n";
}

}  // namespace

TraceStatistics trace_statistics(const std::vector<RunRow>& rows) {
  TraceStatistics s;
  if (rows.empty()) return s;
  const RunRow& last = rows.back();
  s.final_subopt = last.subopt;
  s.final_regret = last.regret_partial;
  s.total_queries = last.queries;
  s.rounds = last.round;

  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& row : rows) {
    if (row.subopt && *row.subopt > 0.0 && row.queries > 0) {
      xs.push_back(static_cast<double>(row.queries));
      ys.push_back(*row.subopt);
    }
  }
  if (xs.size() < 4) {
    xs.clear();
    ys.clear();
    for (const auto& row : rows) {
      if (!row.subopt && row.regret_partial && *row.regret_partial > 0.0 &&
          row.round > 0) {
        xs.push_back(static_cast<double>(row.round));
        ys.push_back(*row.regret_partial);
      }
    }
  }
  if (xs.size() >= 4) {
    const bool distinct = std::adjacent_find(xs.begin(), xs.end()) == xs.end();
    if (distinct && xs.front() != xs.back()) s.fitted_slope = loglog_slope(xs, ys);
  }

  // Geometric fit over the rows above the double-precision floor.
  const RunRow* head = nullptr;
  for (const auto& row : rows) {
    if (row.subopt) {
      head = &row;
      break;
    }
  }
  if (head) {
    const double cutoff = 1e-12 * std::max(1.0, *head->subopt);
    std::vector<double> q;
    std::vector<double> v;
    for (const auto& row : rows) {
      if (row.subopt && *row.subopt > cutoff) {
        q.push_back(static_cast<double>(row.queries));
        v.push_back(*row.subopt);
      }
    }
    if (q.size() >= 4 && q.front() != q.back()) {
      const GeometricRate g = geometric_rate(q, v);
      s.fitted_rate = g.rate;
      s.rate_r_squared = g.r_squared;
    }
  }
  return s;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentResult res;
  res.config = config;
  if (is_online(config.algorithm)) {
    run_online_algorithm(config, res);
  } else {
    const ObjectivePtr obj = make_problem(config);
    switch (config.algorithm) {
      case Algorithm::kO2bConvexUniversal:
      case Algorithm::kBaselineOgd:
        run_conversion(config, obj, res);
        break;
      case Algorithm::kAlg3GridSearch:
        run_grid(config, obj, res);
        break;
      default:
        run_guess_check(config, obj, res);
        break;
    }
  }
  res.stats = trace_statistics(res.trace.rows);
  res.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  res.summary_json = build_summary(res);
  return res;
}

std::string format_trace_csv(const std::vector<RunRow>& rows) {
  std::string out = "round,queries,subopt,regret_partial,eta,beta,accepted\n";
  auto field = [&out](const std::optional<double>& v) {
    out += ',';
    if (v) out += format_double(*v);
  };
  for (const auto& row : rows) {
    out += std::to_string(row.round);
    out += ',';
    out += std::to_string(row.queries);
    field(row.subopt);
    field(row.regret_partial);
    field(row.eta);
    field(row.beta);
    out += ',';
    if (row.accepted) out += *row.accepted ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::vector<RunRow> parse_trace_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) ||
      trim(line) != "round,queries,subopt,regret_partial,eta,beta,accepted") {
    throw ConfigError("trace: unexpected header");
  }
  std::vector<RunRow> rows;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(trim(item));
    if (line.back() == ',') f.emplace_back();
    if (f.size() != 7) throw ConfigError("trace: expected 7 fields");
    auto opt = [](const std::string& s) -> std::optional<double> {
      if (s.empty()) return std::nullopt;
      return parse_double("trace", s);
    };
    RunRow row;
    row.round = parse_unsigned("trace.round", f[0]);
    row.queries = parse_unsigned("trace.queries", f[1]);
    row.subopt = opt(f[2]);
    row.regret_partial = opt(f[3]);
    row.eta = opt(f[4]);
    row.beta = opt(f[5]);
    if (!f[6].empty()) row.accepted = f[6] == "1";
    rows.push_back(row);
  }
  return rows;
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp-" + std::to_string(::getpid()) + "-" +
         std::to_string(counter.fetch_add(1));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename onto " + path.string());
  }
}

void write_outputs(const ExperimentResult& result) {
  if (!result.config.trace_path.empty()) {
    write_file_atomic(result.config.trace_path,
                      format_trace_csv(result.trace.rows));
  }
  if (!result.config.summary_path.empty()) {
    write_file_atomic(result.config.summary_path, result.summary_json);
  }
}

std::size_t sweep_thread_cap() {
  if (const char* env = std::getenv("HOLDEROPT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return static_cast<std::size_t>(v);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepResult run_sweep(const ExperimentConfig& config,
                      const std::vector<std::size_t>& budgets,
                      std::size_t threads) {
  if (budgets.empty()) throw ConfigError("budgets: expected at least one");
  std::vector<ExperimentConfig> configs;
  for (std::size_t t : budgets) configs.push_back(with_budget(config, t));

  SweepResult sweep;
  sweep.runs.resize(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < configs.size();
         i = next.fetch_add(1)) {
      try {
        sweep.runs[i] = run_experiment(configs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n =
      std::clamp<std::size_t>(threads, 1, configs.size());
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  bool positive = true;
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    const auto& st = sweep.runs[i].stats;
    const double v = st.final_subopt ? *st.final_subopt
                                     : st.final_regret.value_or(0.0);
    sweep.budgets.push_back(static_cast<double>(budgets[i]));
    sweep.finals.push_back(v);
    positive = positive && v > 0.0;
  }
  if (positive && budgets.size() >= 4) {
    sweep.slope = loglog_slope(sweep.budgets, sweep.finals);
  }
  Json agg;
  agg["algorithm"] = std::string(to_string(config.algorithm));
  agg["budgets"] = budgets;
  agg["finals"] = sweep.finals;
  agg["slope"] = optional_json(sweep.slope);
  Json summaries = Json::array();
  for (const auto& run : sweep.runs) {
    summaries.push_back(run.config.summary_path.string());
  }
  agg["summaries"] = summaries;
  sweep.aggregate_json = agg.dump(2) + "\n";
  return sweep;
}

}  // namespace holderopt
