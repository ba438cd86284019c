/*
 * Copyright 2026 vacuumpair contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// vacuumpair: command line front end.
//
//   vacuumpair eval      one parameter point, all observables
//   vacuumpair curve     one observable swept over a beta grid
//   vacuumpair critical  critical reduced field for a spacetime volume
//   vacuumpair selftest  internal identity and consistency checks
//
// Exit codes: 0 success, 1 selftest failure, 2 usage or domain error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vacuumpair/constants.hpp"
#include "vacuumpair/format.hpp"
#include "vacuumpair/physics.hpp"
#include "vacuumpair/specfun.hpp"

namespace {

using vacuumpair::constants::DerivedScales;
using vacuumpair::constants::Particle;
using vacuumpair::constants::PhysicalConstants;
using vacuumpair::constants::Spin;
using vacuumpair::physics::ReducedField;
using vacuumpair::physics::SpacetimeVolume;
namespace fmt = vacuumpair::format;
namespace physics = vacuumpair::physics;
namespace specfun = vacuumpair::specfun;

constexpr double kPi = vacuumpair::constants::kPi;

PhysicalConstants resolve_constants(const std::string& config_path) {
  if (config_path.empty()) return vacuumpair::constants::codata2018();
  return vacuumpair::constants::load_constants_file(config_path);
}

Particle resolve_particle(const std::string& name,
                          const PhysicalConstants& k) {
  if (name == "electron") return vacuumpair::constants::electron(k);
  throw std::domain_error("unknown particle: " + name);
}

Spin parse_spin(const std::string& text) {
  double value = 0.0;
  std::size_t used = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used == text.size() && value == 0.0) return Spin::zero;
  if (used == text.size() && value == 0.5) return Spin::half;
  throw std::domain_error("spin must be 0 or 0.5");
}

// A sweep of one observable over [beta_min, beta_max]. Endpoints land
// exactly on the bounds; interior points follow i/(points-1) spacing on a
// linear or logarithmic axis.
struct CurveSpec {
  std::string observable;
  double beta_min = 0.0;
  double beta_max = 0.0;
  int points = 0;
  bool log_scale = false;
  Spin spin = Spin::half;
  double vt = 1.0;
};

std::vector<double> make_grid(const CurveSpec& c) {
  std::vector<double> grid(static_cast<std::size_t>(c.points));
  for (int i = 0; i < c.points; ++i) {
    if (i == 0) {
      grid[i] = c.beta_min;
    } else if (i == c.points - 1) {
      grid[i] = c.beta_max;
    } else {
      const double frac = static_cast<double>(i) / (c.points - 1);
      grid[i] = c.log_scale
                    ? c.beta_min * std::pow(c.beta_max / c.beta_min, frac)
                    : c.beta_min + (c.beta_max - c.beta_min) * frac;
    }
  }
  return grid;
}

double eval_observable(const std::string& name, const ReducedField& f,
                       Spin spin, const SpacetimeVolume& vol,
                       const DerivedScales& scales) {
  if (name == "ratio") return physics::series_ratio(f);
  if (name == "rate_leading") return physics::rate_leading(f, scales).value;
  if (name == "rate_full") return physics::rate_full(f, spin, scales).value;
  if (name == "prob_linear") return physics::prob_linear(f, spin, vol, scales);
  if (name == "prob_pair") return physics::prob_pair(f, spin, vol, scales).value;
  throw std::domain_error("unknown observable: " + name);
}

struct EvalArgs {
  double beta = 0.0;
  double field_vpercm = 0.0;
  bool has_beta = false;
  bool has_field = false;
  std::string spin_text = "0.5";
  double vt = 1.0;
  std::string particle = "electron";
  std::string format = "csv";
};

int run_eval(const EvalArgs& a, const std::string& config_path) {
  const PhysicalConstants k = resolve_constants(config_path);
  const Particle p = resolve_particle(a.particle, k);
  const DerivedScales scales = vacuumpair::constants::derive_scales(p, k);

  if (!a.has_beta && !a.has_field) {
    throw std::domain_error("exactly one of --beta or --field-vpercm is required");
  }
  double beta = a.beta;
  if (a.has_field) {
    if (!(std::isfinite(a.field_vpercm) && a.field_vpercm > 0.0)) {
      throw std::domain_error("field must be positive and finite");
    }
    beta = a.field_vpercm / scales.e_cr;
  }

  const ReducedField f{beta};
  const Spin spin = parse_spin(a.spin_text);
  const SpacetimeVolume vol{a.vt};

  const double x = physics::exp_factor(f);
  const double rate_leading = physics::rate_leading(f, scales).value;
  const double rate_full = physics::rate_full(f, spin, scales).value;
  const double ratio = physics::series_ratio(f);
  const double prob_linear = physics::prob_linear(f, spin, vol, scales);
  const double prob_pair = physics::prob_pair(f, spin, vol, scales).value;

  const std::vector<std::pair<std::string, double>> record = {
      {"beta", f.beta},           {"x", x},
      {"rate_leading", rate_leading}, {"rate_full", rate_full},
      {"ratio", ratio},           {"prob_linear", prob_linear},
      {"prob_pair", prob_pair},
  };

  if (a.format == "json") {
    std::vector<std::pair<std::string, std::string>> members;
    members.reserve(record.size());
    for (const auto& [name, value] : record) {
      members.emplace_back(name, fmt::json_number(value));
    }
    std::cout << fmt::json_array({fmt::json_object(members)}) << '\n';
  } else {
    std::vector<std::string> header, row;
    for (const auto& [name, value] : record) {
      header.push_back(name);
      row.push_back(fmt::sci12(value));
    }
    std::cout << fmt::csv_row(header) << fmt::csv_row(row);
  }
  return 0;
}

struct CurveArgs {
  std::string observable;
  double beta_min = 0.0;
  double beta_max = 0.0;
  int points = 0;
  std::string scale = "linear";
  std::string spin_text = "0.5";
  double vt = 1.0;
  std::string particle = "electron";
  std::string format = "csv";
  std::string preset;
};

int run_curve(CurveArgs a, bool observable_set, bool min_set, bool max_set,
              bool points_set, const std::string& config_path) {
  if (a.preset == "fig1") {
    if (!observable_set) a.observable = "ratio";
    if (!min_set) a.beta_min = 0.1;
    if (!max_set) a.beta_max = 2.0;
    if (!points_set) a.points = 39;
  } else if (a.preset == "fig2") {
    if (!observable_set) a.observable = "prob_pair";
    if (!min_set) a.beta_min = 0.02;
    if (!max_set) a.beta_max = 0.04;
    if (!points_set) a.points = 201;
  } else if (!a.preset.empty()) {
    throw std::domain_error("unknown preset: " + a.preset);
  }

  if (a.observable.empty()) {
    throw std::domain_error("--observable is required (or use --preset)");
  }
  if (a.points < 2) {
    throw std::domain_error("--points must be at least 2");
  }
  if (!(std::isfinite(a.beta_min) && a.beta_min > 0.0) ||
      !(std::isfinite(a.beta_max) && a.beta_max > a.beta_min)) {
    throw std::domain_error(
        "need 0 < --beta-min < --beta-max (set them or use --preset)");
  }

  const PhysicalConstants k = resolve_constants(config_path);
  const Particle p = resolve_particle(a.particle, k);
  const DerivedScales scales = vacuumpair::constants::derive_scales(p, k);

  CurveSpec spec;
  spec.observable = a.observable;
  spec.beta_min = a.beta_min;
  spec.beta_max = a.beta_max;
  spec.points = a.points;
  spec.log_scale = a.scale == "log";
  spec.spin = parse_spin(a.spin_text);
  spec.vt = a.vt;

  const SpacetimeVolume vol{spec.vt};
  const std::vector<double> grid = make_grid(spec);

  if (a.format == "json") {
    std::vector<std::string> rows;
    rows.reserve(grid.size());
    for (double beta : grid) {
      const ReducedField f{beta};
      const double value =
          eval_observable(spec.observable, f, spec.spin, vol, scales);
      rows.push_back(fmt::json_object({{"beta", fmt::json_number(beta)},
                                       {spec.observable, fmt::json_number(value)}}));
    }
    std::cout << fmt::json_array(rows) << '\n';
  } else {
    std::cout << fmt::csv_row({"beta", spec.observable});
    for (double beta : grid) {
      const ReducedField f{beta};
      const double value =
          eval_observable(spec.observable, f, spec.spin, vol, scales);
      std::cout << fmt::csv_row({fmt::sci12(beta), fmt::sci12(value)});
    }
  }
  return 0;
}

struct CriticalArgs {
  double vt = 1.0;
  std::string particle = "electron";
  std::string format = "csv";
};

int run_critical(const CriticalArgs& a, const std::string& config_path) {
  const PhysicalConstants k = resolve_constants(config_path);
  const Particle p = resolve_particle(a.particle, k);
  const DerivedScales scales = vacuumpair::constants::derive_scales(p, k);
  const SpacetimeVolume vol{a.vt};

  const physics::CriticalPoint cp = physics::critical_point(scales, vol);
  const std::vector<std::pair<std::string, double>> record = {
      {"beta_c", cp.beta_c},
      {"field_vpercm", cp.beta_c * scales.e_cr},
      {"lambert_arg", cp.lambert_arg},
      {"lambert_w", cp.lambert_w},
      {"residual", cp.residual},
  };

  if (a.format == "json") {
    std::vector<std::pair<std::string, std::string>> members;
    for (const auto& [name, value] : record) {
      members.emplace_back(name, fmt::json_number(value));
    }
    std::cout << fmt::json_array({fmt::json_object(members)}) << '\n';
  } else {
    std::vector<std::string> header, row;
    for (const auto& [name, value] : record) {
      header.push_back(name);
      row.push_back(fmt::sci12(value));
    }
    std::cout << fmt::csv_row(header) << fmt::csv_row(row);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// selftest

struct SelftestReport {
  int passed = 0;
  int failed = 0;

  void check(const std::string& name, const std::string& metric, double err,
             double tol) {
    const bool ok = std::isfinite(err) && err <= tol;
    std::printf("  %s  %-44s %s=%.2e  tol=%.1e\n", ok ? "ok  " : "FAIL",
                name.c_str(), metric.c_str(), err, tol);
    (ok ? passed : failed) += 1;
  }
};

int run_selftest(const std::string& config_path) {
  constexpr double kPiSq6 = 1.644934066848226436472415166646025189;
  constexpr double kIdTol = 1e-12;
  SelftestReport rep;

  // Resolve constants before any output so a bad config fails whole.
  const PhysicalConstants k = resolve_constants(config_path);

  std::printf("vacuumpair selftest\n");

  // Closed-form values of the Rogers dilogarithm at the algebraic points
  // where it collapses to a rational multiple of pi^2, plus both endpoints.
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);  // 0.618...
  rep.check("li2(-1) = -pi^2/12", "abs_err",
            std::fabs(specfun::li2(-1.0).value + kPiSq6 / 2.0), kIdTol);
  rep.check("li2(1) = pi^2/6", "abs_err",
            std::fabs(specfun::li2(1.0).value - kPiSq6), kIdTol);
  rep.check("rogers_l(0) = 0", "abs_err",
            std::fabs(specfun::rogers_l(0.0).value), kIdTol);
  rep.check("rogers_l(golden^2) = pi^2/15", "abs_err",
            std::fabs(specfun::rogers_l(golden * golden).value - kPiSq6 * 0.4),
            kIdTol);
  rep.check("rogers_l(1/2) = pi^2/12", "abs_err",
            std::fabs(specfun::rogers_l(0.5).value - kPiSq6 / 2.0), kIdTol);
  rep.check("rogers_l(golden) = pi^2/10", "abs_err",
            std::fabs(specfun::rogers_l(golden).value - kPiSq6 * 0.6), kIdTol);
  rep.check("rogers_l(1) = pi^2/6", "abs_err",
            std::fabs(specfun::rogers_l(1.0).value - kPiSq6), kIdTol);

  // Functional equations on interior grids.
  double euler_err = 0.0, square_err = 0.0, rogers_err = 0.0;
  for (int i = 1; i < 200; ++i) {
    const double x = i / 200.0;
    const double li2x = specfun::li2(x).value;
    euler_err = std::max(
        euler_err, std::fabs(li2x + specfun::li2(1.0 - x).value +
                             std::log(x) * std::log1p(-x) - kPiSq6));
    square_err = std::max(
        square_err, std::fabs(li2x + specfun::li2(-x).value -
                              0.5 * specfun::li2(x * x).value));
    rogers_err = std::max(
        rogers_err, std::fabs(specfun::rogers_l(x).value +
                              specfun::rogers_l(1.0 - x).value - kPiSq6));
  }
  rep.check("euler reflection on (0,1)", "max_abs_err", euler_err, kIdTol);
  rep.check("square identity on (0,1)", "max_abs_err", square_err, kIdTol);
  rep.check("rogers reflection on (0,1)", "max_abs_err", rogers_err, kIdTol);

  // Lambert W: defining equation across 34 decades, and agreement between
  // the asymptotic seed and the refined value where the expansion is good.
  double lambert_err = 0.0;
  for (int d = -3; d <= 30; ++d) {
    const double a = std::pow(10.0, d);
    const double w = specfun::lambert_w0(a).value;
    lambert_err = std::max(lambert_err, std::fabs(w * std::exp(w) - a) / a);
  }
  rep.check("lambert w residual, a in [1e-3,1e30]", "max_rel_err",
            lambert_err, kIdTol);
  double seed_err = 0.0;
  for (int d = 20; d <= 30; ++d) {
    const double a = std::pow(10.0, d);
    seed_err = std::max(seed_err,
                        std::fabs(specfun::lambert_w0_asymptotic(a) /
                                      specfun::lambert_w0(a).value -
                                  1.0));
  }
  rep.check("lambert asymptotic seed, a in [1e20,1e30]", "max_rel_err",
            seed_err, 1e-6);

  // Scale checks against the active constant set.
  const Particle p = vacuumpair::constants::electron(k);
  const DerivedScales scales = vacuumpair::constants::derive_scales(p, k);

  rep.check("alpha agrees with e^2/(hbar c)", "rel_diff",
            std::fabs(k.e_charge * k.e_charge / (k.hbar * k.c) / k.alpha - 1.0),
            1e-6);

  const double e_cr_gauss =
      scales.e_cr / vacuumpair::constants::kVoltsPerStatvolt;
  const double coupling = p.charge_magnitude * p.charge_magnitude / (k.hbar * k.c);
  const double w0_via_field =
      coupling * e_cr_gauss * e_cr_gauss / (4.0 * kPi * kPi * kPi * k.hbar);
  rep.check("w0 route agreement", "rel_diff",
            std::fabs(w0_via_field / scales.w0 - 1.0), 1e-10);

  const physics::CriticalPoint cp =
      physics::critical_point(scales, SpacetimeVolume{1.0});
  rep.check("critical point residual at vt=1", "abs_err",
            std::fabs(cp.residual), 1e-10);

  std::printf("selftest: %d/%d checks passed\n", rep.passed,
              rep.passed + rep.failed);
  return rep.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pair creation by a constant electric field: exact-series "
               "rates, pair probabilities, critical field"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "constants config file (key=value lines)")
      ->envname("VACUUMPAIR_CONFIG");

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "all observables at one point");
  CLI::Option* beta_opt = eval->add_option("--beta", eval_args.beta,
                                           "reduced field E/E_cr");
  CLI::Option* field_opt = eval->add_option(
      "--field-vpercm", eval_args.field_vpercm, "field strength in V/cm");
  beta_opt->excludes(field_opt);
  field_opt->excludes(beta_opt);
  eval->add_option("--spin", eval_args.spin_text, "particle spin (0 or 0.5)")
      ->capture_default_str();
  eval->add_option("--vt", eval_args.vt, "spacetime volume in cm^3 s")
      ->capture_default_str();
  eval->add_option("--particle", eval_args.particle, "particle species")
      ->capture_default_str();
  eval->add_option("--format", eval_args.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  CurveArgs curve_args;
  CLI::App* curve = app.add_subcommand("curve", "sweep one observable");
  CLI::Option* obs_opt =
      curve->add_option("--observable", curve_args.observable,
                        "one of ratio, rate_leading, rate_full, prob_linear, "
                        "prob_pair")
          ->check(CLI::IsMember({"ratio", "rate_leading", "rate_full",
                                 "prob_linear", "prob_pair"}));
  CLI::Option* min_opt =
      curve->add_option("--beta-min", curve_args.beta_min, "lower beta bound");
  CLI::Option* max_opt =
      curve->add_option("--beta-max", curve_args.beta_max, "upper beta bound");
  CLI::Option* points_opt =
      curve->add_option("--points", curve_args.points, "grid size (>= 2)");
  curve->add_option("--scale", curve_args.scale, "grid spacing")
      ->check(CLI::IsMember({"linear", "log"}))
      ->capture_default_str();
  curve->add_option("--spin", curve_args.spin_text, "particle spin (0 or 0.5)")
      ->capture_default_str();
  curve->add_option("--vt", curve_args.vt, "spacetime volume in cm^3 s")
      ->capture_default_str();
  curve->add_option("--particle", curve_args.particle, "particle species")
      ->capture_default_str();
  curve->add_option("--format", curve_args.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  curve->add_option("--preset", curve_args.preset,
                    "named sweep: fig1 (ratio) or fig2 (prob_pair)")
      ->check(CLI::IsMember({"fig1", "fig2"}));

  CriticalArgs critical_args;
  CLI::App* critical =
      app.add_subcommand("critical", "critical reduced field for a volume");
  critical->add_option("--vt", critical_args.vt, "spacetime volume in cm^3 s")
      ->capture_default_str();
  critical->add_option("--particle", critical_args.particle, "particle species")
      ->capture_default_str();
  critical->add_option("--format", critical_args.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  CLI::App* selftest =
      app.add_subcommand("selftest", "identity and consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval->parsed()) {
      eval_args.has_beta = beta_opt->count() > 0;
      eval_args.has_field = field_opt->count() > 0;
      return run_eval(eval_args, config_path);
    }
    if (curve->parsed()) {
      return run_curve(curve_args, obs_opt->count() > 0, min_opt->count() > 0,
                       max_opt->count() > 0, points_opt->count() > 0,
                       config_path);
    }
    if (critical->parsed()) return run_critical(critical_args, config_path);
    if (selftest->parsed()) return run_selftest(config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
