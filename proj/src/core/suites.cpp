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

#include "holderopt/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "holderopt/certificates.hpp"
#include "holderopt/conversion.hpp"
#include "holderopt/errors.hpp"
#include "holderopt/metrics.hpp"
#include "holderopt/online_learners.hpp"
#include "holderopt/online_sequence.hpp"
#include "holderopt/problems.hpp"
#include "holderopt/strongly_convex.hpp"

namespace holderopt {

namespace {

// Shared harness: 5-D, ball of radius 2 (D = 4) around the origin.
constexpr std::size_t kDim = 5;
constexpr double kRadius = 2.0;

RealVector harness_center() { return {0.5, -0.3, 0.2, 0.4, -0.6}; }
RealVector harness_start() { return {1.5, 1.0, 0.5, -0.5, 0.3}; }
RealVector harness_eigenvalues() { return {1.0, 2.5, 4.0, 7.0, 10.0}; }
Domain harness_domain() { return Domain::ball(RealVector(kDim), kRadius); }

RealVector geometric_eigenvalues(double kappa) {
  std::vector<double> e(kDim);
  for (std::size_t i = 0; i < kDim; ++i) {
    e[i] = std::pow(kappa, static_cast<double>(i) / (kDim - 1));
  }
  return RealVector(std::move(e));
}

std::vector<std::size_t> powers_of_two(int lo, int hi) {
  std::vector<std::size_t> out;
  for (int k = lo; k <= hi; ++k) out.push_back(std::size_t{1} << k);
  return out;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double max_over_median(const std::vector<double>& v) {
  return *std::max_element(v.begin(), v.end()) / median(v);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Final suboptimality of the universal method at each budget.
double convex_slope(const ObjectivePtr& obj, CriterionReport& report) {
  const Domain domain = harness_domain();
  const double optimum = constrained_minimum(*obj, domain).value;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t t : powers_of_two(5, 10)) {
    UniversalConvexOptions options;
    options.x_init = harness_start();
    const ConversionTrace trace =
        universal_convex_optimize(obj, domain, t, {}, options);
    xs.push_back(static_cast<double>(t));
    ys.push_back(trace.output_value - optimum);
    report.measures["subopt_T" + std::to_string(t)] = ys.back();
  }
  const double slope = loglog_slope(xs, ys);
  report.measures["slope"] = slope;
  return slope;
}

CriterionReport make_report(int id, std::string name) {
  CriterionReport r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

}  // namespace

std::string format_report(const CriterionReport& report) {
  std::string out = "criterion " + std::to_string(report.id) + " " +
                    report.name + ": " + (report.pass ? "PASS" : "FAIL");
  for (const auto& [key, value] : report.measures) {
    out += " " + key + "=" + fmt(value);
  }
  if (!report.detail.empty()) out += " (" + report.detail + ")";
  return out;
}

CriterionReport criterion_convex_smooth() {
  auto r = make_report(1, "convex_smooth_acceleration");
  const double slope = convex_slope(
      make_quadratic(harness_center(), harness_eigenvalues()), r);
  r.pass = slope <= -1.8;
  return r;
}

CriterionReport criterion_convex_holder() {
  auto r = make_report(2, "convex_holder_interpolation");
  const double slope =
      convex_slope(make_holder_power(harness_center(), 0.5), r);
  r.pass = slope >= -1.45 && slope <= -1.05;
  return r;
}

CriterionReport criterion_convex_nonsmooth() {
  auto r = make_report(3, "convex_nonsmooth");
  const double slope = convex_slope(make_nonsmooth(harness_center(), 0.0), r);
  r.pass = slope >= -0.65 && slope <= -0.40;
  return r;
}

CriterionReport criterion_stochastic_floor() {
  auto r = make_report(4, "stochastic_floor");
  const ObjectivePtr obj =
      make_quadratic(harness_center(), harness_eigenvalues());
  const Domain domain = harness_domain();
  const double optimum = constrained_minimum(*obj, domain).value;
  constexpr int kSeeds = 20;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t t : powers_of_two(8, 12)) {
    double sum = 0.0;
    for (int seed = 0; seed < kSeeds; ++seed) {
      UniversalConvexOptions options;
      options.x_init = harness_start();
      const OracleOptions oracle{NoiseMode::kStochastic, 1.0,
                                 static_cast<std::uint64_t>(seed)};
      sum += universal_convex_optimize(obj, domain, t, oracle, options)
                 .output_value -
             optimum;
    }
    xs.push_back(static_cast<double>(t));
    ys.push_back(sum / kSeeds);
    r.measures["mean_subopt_T" + std::to_string(t)] = ys.back();
  }
  const double slope = loglog_slope(xs, ys);
  r.measures["slope"] = slope;
  r.pass = slope >= -0.65 && slope <= -0.40;
  return r;
}

CriterionReport criterion_strongly_convex_rate() {
  auto r = make_report(5, "strongly_convex_accelerated");
  const Domain domain = harness_domain();
  constexpr std::size_t kBudget = 1000;
  r.pass = true;
  for (double kappa : {4.0, 25.0, 100.0}) {
    const ObjectivePtr obj =
        make_quadratic(harness_center(), geometric_eigenvalues(kappa));
    const double optimum = constrained_minimum(*obj, domain).value;
    const GuessCheckResult run =
        run_thm4(obj, domain, 1.0, kBudget, harness_start());
    const double cutoff =
        1e-12 * std::max(1.0, obj->value(harness_start()) - optimum);
    std::vector<double> q;
    std::vector<double> v;
    for (const auto& rec : run.records) {
      if (rec.value - optimum > cutoff) {
        q.push_back(static_cast<double>(rec.query));
        v.push_back(rec.value - optimum);
      }
    }
    const GeometricRate rate = geometric_rate(q, v);
    const double need = 0.8 / (6.0 * std::sqrt(kappa));
    const std::string k = std::to_string(static_cast<int>(kappa));
    r.measures["rho_kappa" + k] = rate.rate;
    r.measures["r2_kappa" + k] = rate.r_squared;
    r.measures["need_kappa" + k] = need;
    r.pass = r.pass && rate.rate >= need && rate.r_squared >= 0.95;
  }
  return r;
}

CriterionReport criterion_strongly_convex_nonsmooth() {
  auto r = make_report(6, "strongly_convex_nonsmooth");
  const Domain domain = harness_domain();
  const ObjectivePtr obj = make_nonsmooth(harness_center(), 1.0);
  const double optimum = constrained_minimum(*obj, domain).value;
  std::vector<double> scaled;
  for (std::size_t t : powers_of_two(7, 12)) {
    const GuessCheckResult run =
        run_thm4(obj, domain, 1.0, t, harness_start());
    const double tt = static_cast<double>(t);
    scaled.push_back((run.output_value - optimum) * tt / std::log(tt));
    r.measures["scaled_T" + std::to_string(t)] = scaled.back();
  }
  const double ratio = max_over_median(scaled);
  r.measures["max_over_median"] = ratio;
  r.pass = ratio <= 3.0;
  return r;
}

CriterionReport criterion_grid_search() {
  auto r = make_report(7, "grid_search");
  constexpr std::size_t kBudget = 4096;
  const ObjectivePtr obj =
      make_quadratic(harness_center(), geometric_eigenvalues(100.0));
  const double optimum = obj->value(harness_center());
  const GridSearchResult grid =
      grid_search_run(obj, kBudget, harness_start());
  const std::size_t m = grid_size(kBudget);
  const GuessCheckResult reference = run_cor1_unknown_L(
      obj, Domain::all_space(kDim), 1.0, kBudget / m, harness_start());
  const double grid_gap = grid.output_value - optimum;
  const double ref_gap = reference.output_value - optimum;
  r.measures["grid_subopt"] = grid_gap;
  r.measures["reference_subopt"] = ref_gap;
  r.measures["instances"] = static_cast<double>(m);
  r.measures["queries"] = static_cast<double>(grid.queries);
  r.pass = grid_gap <= 10.0 * ref_gap && grid.queries <= kBudget;
  return r;
}

CriterionReport criterion_online_convex() {
  auto r = make_report(8, "online_regret_interpolation");
  const Domain domain = harness_domain();
  OnlineRunOptions options;
  options.x_init = harness_start();
  std::vector<double> fixed_regret;
  std::vector<double> switch_regret;
  for (std::size_t t : powers_of_two(8, 14)) {
    SequenceParams fixed;
    fixed.horizon = t;
    fixed.base = make_quadratic(harness_center(), harness_eigenvalues());
    const OnlineSequence a =
        make_online_sequence(SequenceFamily::kFixed, fixed, 0);
    fixed_regret.push_back(
        regret(a, run_online_convex(a, domain, t, options), domain).value);
    r.measures["fixed_regret_T" + std::to_string(t)] = fixed_regret.back();

    SequenceParams sw;
    sw.horizon = t;
    sw.coefficients = RealVector::unit(kDim, 0);
    const OnlineSequence b =
        make_online_sequence(SequenceFamily::kAdversarialSwitch, sw, 0);
    switch_regret.push_back(
        regret(b, run_online_convex(b, domain, t, options), domain).value /
        std::sqrt(static_cast<double>(t)));
    r.measures["switch_scaled_T" + std::to_string(t)] = switch_regret.back();
  }
  const double ra = max_over_median(fixed_regret);
  const double rb = max_over_median(switch_regret);
  r.measures["fixed_max_over_median"] = ra;
  r.measures["switch_max_over_median"] = rb;
  r.pass = ra <= 3.0 && rb <= 3.0;
  return r;
}

CriterionReport criterion_online_strongly_convex() {
  auto r = make_report(9, "online_strongly_convex_regret");
  const Domain domain = harness_domain();
  OnlineRunOptions options;
  options.x_init = harness_start();
  std::vector<double> scaled;
  for (std::size_t t : powers_of_two(8, 14)) {
    SequenceParams params;
    params.horizon = t;
    params.base = make_quadratic(harness_center(), RealVector(kDim, 1.0));
    const OnlineSequence seq =
        make_online_sequence(SequenceFamily::kFixed, params, 0);
    const OnlineTrace trace =
        run_online_strongly_convex(seq, domain, 1.0, t, options);
    scaled.push_back(regret(seq, trace, domain).value /
                     std::log(static_cast<double>(t)));
    r.measures["scaled_T" + std::to_string(t)] = scaled.back();
  }
  const double ratio = max_over_median(scaled);
  r.measures["max_over_median"] = ratio;
  r.pass = ratio <= 3.0;
  return r;
}

CriterionReport criterion_certificates() {
  auto r = make_report(10, "certificates");
  std::ostringstream failures;
  std::size_t checks = 0;
  auto record = [&](const Certificate& c, const std::string& what) {
    ++checks;
    if (!c.pass) failures << what << ": " << c.detail << "; ";
  };

  const Domain domain = harness_domain();
  const std::vector<std::pair<std::string, ObjectivePtr>> zoo = {
      {"quadratic", make_quadratic(harness_center(), harness_eigenvalues())},
      {"holder_0.25", make_holder_power(harness_center(), 0.25)},
      {"holder_0.5", make_holder_power(harness_center(), 0.5)},
      {"holder_1", make_holder_power(harness_center(), 1.0)},
      {"nonsmooth", make_nonsmooth(harness_center(), 0.0)},
      {"nonsmooth_sc", make_nonsmooth(harness_center(), 1.0)},
  };

  double worst_stab = 0.0;
  for (const auto& [name, obj] : zoo) {
    const MinimumReport opt = constrained_minimum(*obj, domain);
    for (std::size_t t : {std::size_t{64}, std::size_t{512}}) {
      UniversalConvexOptions options;
      options.x_init = harness_start();
      for (int variant = 0; variant < 2; ++variant) {
        const ConversionTrace trace =
            variant == 0
                ? universal_convex_optimize(obj, domain, t, {}, options)
                : baseline_ogd(obj, domain, t, {}, options);
        const std::string tag = name + "/T" + std::to_string(t) +
                                (variant == 0 ? "/universal" : "/baseline");
        record(check_conversion_bound(trace, *obj, opt.point),
               tag + " eq4");
        record(check_stabilization(trace), tag + " stabilization");
        record(check_self_confident_tuning(trace.tuning_lhs, trace.tuning_rhs),
               tag + " tuning");
        worst_stab = std::max(worst_stab, trace.max_stabilization_residual);
        if (variant == 0 && trace.queries != 2 * trace.rounds - 1) {
          ++checks;
          failures << tag << ": query count; ";
        }
      }
    }
  }
  r.measures["worst_stabilization_residual"] = worst_stab;

  // Adaptive online traces.
  for (auto family : {SequenceFamily::kFixed, SequenceFamily::kDriftingLinear,
                      SequenceFamily::kDriftingQuadratic,
                      SequenceFamily::kAdversarialSwitch}) {
    SequenceParams params;
    params.horizon = 2048;
    params.base = zoo[0].second;
    params.coefficients = RealVector::unit(kDim, 0);
    params.center = harness_center();
    params.eigenvalues = harness_eigenvalues();
    params.drift = 0.01;
    const OnlineSequence seq = make_online_sequence(family, params, 7);
    OnlineRunOptions options;
    options.x_init = harness_start();
    const OnlineTrace trace = run_online_convex(seq, domain, 2048, options);
    record(check_self_confident_tuning(trace.tuning_lhs, trace.tuning_rhs),
           std::string(to_string(family)) + " online tuning");
  }

  // Guess-and-check runs.
  for (double kappa : {1.0, 4.0, 25.0, 100.0}) {
    const ObjectivePtr obj =
        make_quadratic(harness_center(), geometric_eigenvalues(kappa));
    const std::string k = "kappa" + std::to_string(static_cast<int>(kappa));
    record(check_guess_check(
               run_thm4(obj, domain, 1.0, 600, harness_start()), 600),
           k + " thm4");
    record(check_guess_check(run_cor1_known_L(obj, domain, 1.0, kappa, 600,
                                              harness_start()),
                             600),
           k + " cor1_known");
    record(check_guess_check(
               run_cor1_unknown_L(obj, domain, 1.0, 600, harness_start()),
               600),
           k + " cor1_unknown");
  }
  record(check_guess_check(run_thm4(zoo[5].second, domain, 1.0, 600,
                                    harness_start()),
                           600),
         "nonsmooth thm4");

  // Projection.
  const RealVector lower{-1.0, -2.0, 0.0, -0.5, -3.0};
  const RealVector upper{1.0, 0.5, 0.0, 2.0, 3.0};
  record(check_projection(domain, 2000, 1), "ball projection");
  record(check_projection(Domain::box(lower, upper), 2000, 2),
         "box projection");
  record(check_projection(Domain::all_space(kDim), 200, 3),
         "all_space projection");

  // Hoelder and inexact smoothness sampling on the zoo.
  struct Holder {
    std::string name;
    ObjectivePtr obj;
  };
  std::vector<Holder> holder = {{"quadratic", zoo[0].second}};
  for (double nu : {0.25, 0.5, 0.75, 1.0}) {
    holder.push_back({"holder_" + fmt(nu),
                      make_holder_power(harness_center(), nu)});
  }
  holder.push_back({"nonsmooth", zoo[4].second});
  for (const auto& h : holder) {
    const auto& info = h.obj->info();
    const double nu = *info.holder_exponent;
    const double lnu = *info.holder_constant;
    ++checks;
    const HolderReport hr = verify_holder(*h.obj, nu, lnu, domain, 2000, 11);
    if (!hr.pass) failures << h.name << " hoelder ratio " << hr.max_ratio << "; ";
    for (double delta : {1e-1, 1e-3}) {
      ++checks;
      const InexactSmoothnessReport ir = verify_inexact_smoothness(
          *h.obj, nu, lnu, delta, domain, 2000, 13);
      if (!ir.pass) {
        failures << h.name << " inexact smoothness (delta " << delta
                 << ") slack " << ir.worst_slack << "; ";
      }
    }
  }

  r.measures["checks"] = static_cast<double>(checks);
  r.detail = failures.str();
  r.pass = r.detail.empty();
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "convex_rates", "strongly_convex_rates", "online_regret",
      "holder_checks"};
  return names;
}

std::vector<CriterionReport> run_suite(
    std::string_view name,
    const std::function<void(const CriterionReport&)>& sink) {
  using Fn = CriterionReport (*)();
  std::vector<Fn> fns;
  if (name == "convex_rates") {
    fns = {criterion_convex_smooth, criterion_convex_holder,
           criterion_convex_nonsmooth, criterion_stochastic_floor};
  } else if (name == "strongly_convex_rates") {
    fns = {criterion_strongly_convex_rate, criterion_strongly_convex_nonsmooth,
           criterion_grid_search};
  } else if (name == "online_regret") {
    fns = {criterion_online_convex, criterion_online_strongly_convex};
  } else if (name == "holder_checks") {
    fns = {criterion_certificates};
  } else {
    throw ConfigError("unknown suite " + std::string(name));
  }
  std::vector<CriterionReport> out;
  for (Fn fn : fns) {
    out.push_back(fn());
    if (sink) sink(out.back());
  }
  return out;
}

}  // namespace holderopt
