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

#include "holderopt/holderopt.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "holderopt/conversion.hpp"
#include "holderopt/errors.hpp"
#include "holderopt/experiment.hpp"
#include "holderopt/problems.hpp"
#include "holderopt/strongly_convex.hpp"
#include "holderopt/suites.hpp"

struct holderopt_domain {
  holderopt::Domain domain;
};

struct holderopt_objective {
  holderopt::ObjectivePtr objective;
};

struct holderopt_result {
  holderopt::RealVector point;
  double value = 0.0;
  std::size_t queries = 0;
  std::size_t rounds = 0;
};

struct holderopt_experiment {
  holderopt::ExperimentConfig config;
};

namespace {

thread_local std::string last_error;

holderopt_status fail(holderopt_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
holderopt_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const holderopt::ConfigError& e) {
    return fail(HOLDEROPT_CONFIG, e.what());
  } catch (const holderopt::ContractViolation& e) {
    return fail(HOLDEROPT_INVALID_ARGUMENT, e.what());
  } catch (const holderopt::BudgetExhausted& e) {
    return fail(HOLDEROPT_BUDGET, e.what());
  } catch (const holderopt::ConvexityViolation& e) {
    return fail(HOLDEROPT_CONVEXITY, e.what());
  } catch (const holderopt::NumericError& e) {
    return fail(HOLDEROPT_NUMERIC, e.what());
  } catch (const holderopt::IoError& e) {
    return fail(HOLDEROPT_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HOLDEROPT_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HOLDEROPT_INTERNAL, e.what());
  } catch (...) {
    return fail(HOLDEROPT_INTERNAL, "unknown error");
  }
}

holderopt::RealVector read(std::size_t dim, const double* data) {
  if (data == nullptr) {
    throw holderopt::ContractViolation("null array argument");
  }
  return holderopt::RealVector(std::vector<double>(data, data + dim));
}

void write(const holderopt::RealVector& v, double* out) {
  if (out == nullptr) throw holderopt::ContractViolation("null output array");
  std::memcpy(out, v.data(), v.dim() * sizeof(double));
}

template <typename T>
void require(const T* p, const char* what) {
  if (p == nullptr) {
    throw holderopt::ContractViolation(std::string("null ") + what);
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

holderopt_status make_objective(holderopt::ObjectivePtr obj,
                                holderopt_objective** out) {
  *out = new holderopt_objective{std::move(obj)};
  return HOLDEROPT_OK;
}

holderopt_status make_domain(holderopt::Domain domain,
                             holderopt_domain** out) {
  *out = new holderopt_domain{std::move(domain)};
  return HOLDEROPT_OK;
}

holderopt::RealVector start_point(const holderopt_domain* domain,
                                  const double* x0) {
  return x0 ? read(domain->domain.dim(), x0) : domain->domain.center();
}

}  // namespace

extern "C" {

const char* holderopt_version(void) { return "1.0.0"; }

const char* holderopt_status_name(holderopt_status status) {
  switch (status) {
    case HOLDEROPT_OK: return "ok";
    case HOLDEROPT_INVALID_ARGUMENT: return "invalid_argument";
    case HOLDEROPT_CONFIG: return "config";
    case HOLDEROPT_BUDGET: return "budget";
    case HOLDEROPT_CONVEXITY: return "convexity";
    case HOLDEROPT_NUMERIC: return "numeric";
    case HOLDEROPT_IO: return "io";
    case HOLDEROPT_CRITERION: return "criterion";
    case HOLDEROPT_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* holderopt_last_error(void) { return last_error.c_str(); }

void holderopt_string_free(char* s) { std::free(s); }

holderopt_status holderopt_domain_ball(size_t dim, const double* center,
                                       double radius, holderopt_domain** out) {
  return guarded([&] {
    require(out, "output handle");
    return make_domain(holderopt::Domain::ball(read(dim, center), radius), out);
  });
}

holderopt_status holderopt_domain_box(size_t dim, const double* lower,
                                      const double* upper,
                                      holderopt_domain** out) {
  return guarded([&] {
    require(out, "output handle");
    return make_domain(
        holderopt::Domain::box(read(dim, lower), read(dim, upper)), out);
  });
}

holderopt_status holderopt_domain_all_space(size_t dim,
                                            holderopt_domain** out) {
  return guarded([&] {
    require(out, "output handle");
    return make_domain(holderopt::Domain::all_space(dim), out);
  });
}

size_t holderopt_domain_dim(const holderopt_domain* domain) {
  return domain ? domain->domain.dim() : 0;
}

holderopt_status holderopt_domain_diameter(const holderopt_domain* domain,
                                           double* out) {
  return guarded([&] {
    require(domain, "domain");
    require(out, "output");
    *out = domain->domain.diameter();
    return HOLDEROPT_OK;
  });
}

holderopt_status holderopt_domain_project(const holderopt_domain* domain,
                                          const double* point, double* out) {
  return guarded([&] {
    require(domain, "domain");
    write(domain->domain.project(read(domain->domain.dim(), point)), out);
    return HOLDEROPT_OK;
  });
}

void holderopt_domain_free(holderopt_domain* domain) { delete domain; }

holderopt_status holderopt_objective_quadratic(size_t dim, const double* center,
                                               const double* eigenvalues,
                                               holderopt_objective** out) {
  return guarded([&] {
    require(out, "output handle");
    return make_objective(
        holderopt::make_quadratic(read(dim, center), read(dim, eigenvalues)),
        out);
  });
}

holderopt_status holderopt_objective_holder_power(size_t dim,
                                                  const double* center,
                                                  double nu,
                                                  holderopt_objective** out) {
  return guarded([&] {
    require(out, "output handle");
    return make_objective(holderopt::make_holder_power(read(dim, center), nu),
                          out);
  });
}

holderopt_status holderopt_objective_nonsmooth(size_t dim, const double* center,
                                               double lambda,
                                               holderopt_objective** out) {
  return guarded([&] {
    require(out, "output handle");
    return make_objective(holderopt::make_nonsmooth(read(dim, center), lambda),
                          out);
  });
}

size_t holderopt_objective_dim(const holderopt_objective* obj) {
  return obj ? obj->objective->dim() : 0;
}

holderopt_status holderopt_objective_value(const holderopt_objective* obj,
                                           const double* x, double* out) {
  return guarded([&] {
    require(obj, "objective");
    require(out, "output");
    *out = obj->objective->value(read(obj->objective->dim(), x));
    return HOLDEROPT_OK;
  });
}

holderopt_status holderopt_objective_gradient(const holderopt_objective* obj,
                                              const double* x, double* out) {
  return guarded([&] {
    require(obj, "objective");
    write(obj->objective->gradient(read(obj->objective->dim(), x)), out);
    return HOLDEROPT_OK;
  });
}

void holderopt_objective_free(holderopt_objective* obj) { delete obj; }

holderopt_status holderopt_optimize_convex(const holderopt_objective* obj,
                                           const holderopt_domain* domain,
                                           size_t budget, const double* x0,
                                           double sigma, uint64_t seed,
                                           holderopt_result** out) {
  return guarded([&] {
    require(obj, "objective");
    require(domain, "domain");
    require(out, "output handle");
    if (!(sigma >= 0.0)) {
      throw holderopt::ContractViolation("sigma must be non-negative");
    }
    holderopt::OracleOptions oracle;
    oracle.mode = sigma > 0.0 ? holderopt::NoiseMode::kStochastic
                              : holderopt::NoiseMode::kDeterministic;
    oracle.sigma = sigma;
    oracle.seed = seed;
    holderopt::UniversalConvexOptions options;
    options.x_init = start_point(domain, x0);
    const auto trace = holderopt::universal_convex_optimize(
        obj->objective, domain->domain, budget, oracle, options);
    *out = new holderopt_result{trace.output, trace.output_value,
                                trace.queries, trace.rounds};
    return HOLDEROPT_OK;
  });
}

holderopt_status holderopt_optimize_strongly_convex(
    const holderopt_objective* obj, const holderopt_domain* domain,
    double lambda, double beta_initial, double beta_floor, size_t budget,
    const double* x0, holderopt_result** out) {
  return guarded([&] {
    require(obj, "objective");
    require(domain, "domain");
    require(out, "output handle");
    holderopt::GuessCheckOptions options;
    options.lambda = lambda;
    options.beta_initial = beta_initial;
    options.beta_floor = beta_floor;
    options.x_init = start_point(domain, x0);
    const auto run = holderopt::guess_check_run(obj->objective, domain->domain,
                                                budget, options);
    *out = new holderopt_result{run.output, run.output_value, run.queries,
                                run.iterations};
    return HOLDEROPT_OK;
  });
}

holderopt_status holderopt_grid_search(const holderopt_objective* obj,
                                       size_t budget, const double* x0,
                                       holderopt_result** out) {
  return guarded([&] {
    require(obj, "objective");
    require(out, "output handle");
    const std::size_t dim = obj->objective->dim();
    const auto x = x0 ? read(dim, x0) : holderopt::RealVector(dim);
    const auto grid = holderopt::grid_search_run(obj->objective, budget, x);
    *out = new holderopt_result{grid.output, grid.output_value, grid.queries,
                                grid.instances.size()};
    return HOLDEROPT_OK;
  });
}

size_t holderopt_result_dim(const holderopt_result* result) {
  return result ? result->point.dim() : 0;
}

holderopt_status holderopt_result_point(const holderopt_result* result,
                                        double* out) {
  return guarded([&] {
    require(result, "result");
    write(result->point, out);
    return HOLDEROPT_OK;
  });
}

double holderopt_result_value(const holderopt_result* result) {
  return result ? result->value : std::nan("");
}

size_t holderopt_result_queries(const holderopt_result* result) {
  return result ? result->queries : 0;
}

size_t holderopt_result_rounds(const holderopt_result* result) {
  return result ? result->rounds : 0;
}

void holderopt_result_free(holderopt_result* result) { delete result; }

holderopt_status holderopt_experiment_load(const char* path,
                                           holderopt_experiment** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output handle");
    *out = new holderopt_experiment{holderopt::load_config(path)};
    return HOLDEROPT_OK;
  });
}

holderopt_status holderopt_experiment_parse(const char* text,
                                            holderopt_experiment** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output handle");
    *out = new holderopt_experiment{holderopt::parse_config(text)};
    return HOLDEROPT_OK;
  });
}

holderopt_status holderopt_experiment_run(const holderopt_experiment* exp,
                                          int write_files,
                                          char** summary_json) {
  return guarded([&] {
    require(exp, "experiment");
    const auto result = holderopt::run_experiment(exp->config);
    if (write_files) holderopt::write_outputs(result);
    if (summary_json) *summary_json = duplicate(result.summary_json);
    return HOLDEROPT_OK;
  });
}

holderopt_status holderopt_experiment_sweep(const holderopt_experiment* exp,
                                            const size_t* budgets,
                                            size_t count, size_t threads,
                                            int write_files,
                                            char** aggregate_json) {
  return guarded([&] {
    require(exp, "experiment");
    require(budgets, "budgets");
    const std::vector<std::size_t> list(budgets, budgets + count);
    const auto sweep = holderopt::run_sweep(
        exp->config, list,
        threads == 0 ? holderopt::sweep_thread_cap() : threads);
    if (write_files) {
      for (const auto& run : sweep.runs) holderopt::write_outputs(run);
      const auto& summary = exp->config.summary_path;
      if (!summary.empty()) {
        auto path = summary.parent_path() /
                    (summary.stem().string() + "_sweep" +
                     summary.extension().string());
        holderopt::write_file_atomic(path, sweep.aggregate_json);
      }
    }
    if (aggregate_json) *aggregate_json = duplicate(sweep.aggregate_json);
    return HOLDEROPT_OK;
  });
}

void holderopt_experiment_free(holderopt_experiment* exp) { delete exp; }

size_t holderopt_sweep_thread_cap(void) {
  return holderopt::sweep_thread_cap();
}

size_t holderopt_suite_count(void) {
  return holderopt::suite_names().size();
}

const char* holderopt_suite_name(size_t index) {
  const auto& names = holderopt::suite_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

holderopt_status holderopt_suite_run(const char* name,
                                     holderopt_report_fn report, void* user,
                                     size_t* failures) {
  std::size_t failed = 0;
  const holderopt_status status = guarded([&] {
    require(name, "suite name");
    holderopt::run_suite(name, [&](const holderopt::CriterionReport& r) {
      if (!r.pass) ++failed;
      if (report) {
        report(r.id, r.pass ? 1 : 0, holderopt::format_report(r).c_str(),
               user);
      }
    });
    return HOLDEROPT_OK;
  });
  if (failures) *failures = failed;
  if (status != HOLDEROPT_OK) return status;
  if (failed > 0) {
    return fail(HOLDEROPT_CRITERION,
                std::to_string(failed) + " criterion failure(s) in " + name);
  }
  return HOLDEROPT_OK;
}

}  // extern "C"
