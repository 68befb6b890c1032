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

/* C interface to the holderopt library. Every function returns a status
 * code; on failure holderopt_last_error() describes the cause for the
 * calling thread. Handles are opaque and released with their _free
 * function, which accepts NULL. */

#ifndef HOLDEROPT_HOLDEROPT_H_
#define HOLDEROPT_HOLDEROPT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HOLDEROPT_API __declspec(dllexport)
#else
#define HOLDEROPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum holderopt_status {
  HOLDEROPT_OK = 0,
  HOLDEROPT_INVALID_ARGUMENT = 1,
  HOLDEROPT_CONFIG = 2,
  HOLDEROPT_BUDGET = 3,
  HOLDEROPT_CONVEXITY = 4,
  HOLDEROPT_NUMERIC = 5,
  HOLDEROPT_IO = 6,
  HOLDEROPT_CRITERION = 7,
  HOLDEROPT_INTERNAL = 8
} holderopt_status;

typedef struct holderopt_domain holderopt_domain;
typedef struct holderopt_objective holderopt_objective;
typedef struct holderopt_result holderopt_result;
typedef struct holderopt_experiment holderopt_experiment;

HOLDEROPT_API const char* holderopt_version(void);
HOLDEROPT_API const char* holderopt_status_name(holderopt_status status);
/* Message of the last failed call on this thread, "" if none. */
HOLDEROPT_API const char* holderopt_last_error(void);
/* Releases strings returned through char** out-parameters. */
HOLDEROPT_API void holderopt_string_free(char* s);

/* Domains. */
HOLDEROPT_API holderopt_status holderopt_domain_ball(size_t dim,
                                                     const double* center,
                                                     double radius,
                                                     holderopt_domain** out);
HOLDEROPT_API holderopt_status holderopt_domain_box(size_t dim,
                                                    const double* lower,
                                                    const double* upper,
                                                    holderopt_domain** out);
HOLDEROPT_API holderopt_status
holderopt_domain_all_space(size_t dim, holderopt_domain** out);
HOLDEROPT_API size_t holderopt_domain_dim(const holderopt_domain* domain);
/* +inf for all_space. */
HOLDEROPT_API holderopt_status
holderopt_domain_diameter(const holderopt_domain* domain, double* out);
/* `out` may alias `point`. */
HOLDEROPT_API holderopt_status holderopt_domain_project(
    const holderopt_domain* domain, const double* point, double* out);
HOLDEROPT_API void holderopt_domain_free(holderopt_domain* domain);

/* Objectives. */
HOLDEROPT_API holderopt_status holderopt_objective_quadratic(
    size_t dim, const double* center, const double* eigenvalues,
    holderopt_objective** out);
HOLDEROPT_API holderopt_status holderopt_objective_holder_power(
    size_t dim, const double* center, double nu, holderopt_objective** out);
HOLDEROPT_API holderopt_status holderopt_objective_nonsmooth(
    size_t dim, const double* center, double lambda,
    holderopt_objective** out);
HOLDEROPT_API size_t holderopt_objective_dim(const holderopt_objective* obj);
HOLDEROPT_API holderopt_status holderopt_objective_value(
    const holderopt_objective* obj, const double* x, double* out);
HOLDEROPT_API holderopt_status holderopt_objective_gradient(
    const holderopt_objective* obj, const double* x, double* out);
HOLDEROPT_API void holderopt_objective_free(holderopt_objective* obj);

/* Optimizers. `x0` may be NULL (domain center). */
HOLDEROPT_API holderopt_status holderopt_optimize_convex(
    const holderopt_objective* obj, const holderopt_domain* domain,
    size_t budget, const double* x0, double sigma, uint64_t seed,
    holderopt_result** out);
HOLDEROPT_API holderopt_status holderopt_optimize_strongly_convex(
    const holderopt_objective* obj, const holderopt_domain* domain,
    double lambda, double beta_initial, double beta_floor, size_t budget,
    const double* x0, holderopt_result** out);
HOLDEROPT_API holderopt_status
holderopt_grid_search(const holderopt_objective* obj, size_t budget,
                      const double* x0, holderopt_result** out);
HOLDEROPT_API size_t holderopt_result_dim(const holderopt_result* result);
HOLDEROPT_API holderopt_status
holderopt_result_point(const holderopt_result* result, double* out);
HOLDEROPT_API double holderopt_result_value(const holderopt_result* result);
HOLDEROPT_API size_t holderopt_result_queries(const holderopt_result* result);
HOLDEROPT_API size_t holderopt_result_rounds(const holderopt_result* result);
HOLDEROPT_API void holderopt_result_free(holderopt_result* result);

/* Experiments driven by a key=value configuration. */
HOLDEROPT_API holderopt_status
holderopt_experiment_load(const char* path, holderopt_experiment** out);
HOLDEROPT_API holderopt_status
holderopt_experiment_parse(const char* text, holderopt_experiment** out);
/* Runs once; writes the configured trace/summary files when write_files is
 * nonzero. `summary_json` (may be NULL) receives the summary. */
HOLDEROPT_API holderopt_status holderopt_experiment_run(
    const holderopt_experiment* exp, int write_files, char** summary_json);
/* One run per budget on up to `threads` threads (0: the
 * HOLDEROPT_THREADS cap). Outputs get a _T<budget> suffix; the aggregate
 * goes next to the summary path with a _sweep suffix. */
HOLDEROPT_API holderopt_status holderopt_experiment_sweep(
    const holderopt_experiment* exp, const size_t* budgets, size_t count,
    size_t threads, int write_files, char** aggregate_json);
HOLDEROPT_API void holderopt_experiment_free(holderopt_experiment* exp);
HOLDEROPT_API size_t holderopt_sweep_thread_cap(void);

/* Verification suites. `report` (may be NULL) receives one line per
 * criterion. Returns HOLDEROPT_CRITERION when any criterion fails. */
typedef void (*holderopt_report_fn)(int id, int pass, const char* line,
                                    void* user);
HOLDEROPT_API size_t holderopt_suite_count(void);
HOLDEROPT_API const char* holderopt_suite_name(size_t index);
HOLDEROPT_API holderopt_status holderopt_suite_run(const char* name,
                                                   holderopt_report_fn report,
                                                   void* user,
                                                   size_t* failures);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* HOLDEROPT_HOLDEROPT_H_ */
