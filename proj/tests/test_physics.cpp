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

#include <catch2/catch_amalgamated.hpp>
#include <mpfr.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "vacuumpair/constants.hpp"
#include "vacuumpair/physics.hpp"

namespace vc = vacuumpair::constants;
namespace vp = vacuumpair::physics;

using vc::Spin;
using vp::ReducedField;
using vp::SpacetimeVolume;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double rel_diff(double a, double b) {
  return std::fabs(a - b) / std::fabs(b);
}

vc::DerivedScales electron_scales() {
  const vc::PhysicalConstants k = vc::codata2018();
  return vc::derive_scales(vc::electron(k), k);
}

enum class RateKind { leading, fermion, boson };

// Rate density recomputed at 240 bits from the same double inputs the
// library consumes. The dilogarithm is summed term by term; 600 terms
// exhaust 240-bit precision for x <= 0.55, i.e. beta <= 5.
double rate_mpfr(double beta, RateKind kind) {
  REQUIRE(beta <= 5.0);
  const vc::PhysicalConstants k = vc::codata2018();
  const mpfr_prec_t prec = 240;
  mpfr_t m, c, hb, b, pi, w0, x, acc, power, term, tmp;
  mpfr_inits2(prec, m, c, hb, b, pi, w0, x, acc, power, term, tmp,
              static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(m, k.electron_mass, MPFR_RNDN);
  mpfr_set_d(c, k.c, MPFR_RNDN);
  mpfr_set_d(hb, k.hbar, MPFR_RNDN);
  mpfr_set_d(b, beta, MPFR_RNDN);
  mpfr_const_pi(pi, MPFR_RNDN);

  // w0 = m^4 c^5 / (4 pi^3 hbar^4)
  mpfr_pow_ui(w0, m, 4, MPFR_RNDN);
  mpfr_pow_ui(tmp, c, 5, MPFR_RNDN);
  mpfr_mul(w0, w0, tmp, MPFR_RNDN);
  mpfr_pow_ui(tmp, pi, 3, MPFR_RNDN);
  mpfr_mul_ui(tmp, tmp, 4, MPFR_RNDN);
  mpfr_div(w0, w0, tmp, MPFR_RNDN);
  mpfr_pow_ui(tmp, hb, 4, MPFR_RNDN);
  mpfr_div(w0, w0, tmp, MPFR_RNDN);

  // x = exp(-pi/beta)
  mpfr_div(x, pi, b, MPFR_RNDN);
  mpfr_neg(x, x, MPFR_RNDN);
  mpfr_exp(x, x, MPFR_RNDN);

  if (kind == RateKind::leading) {
    mpfr_set(acc, x, MPFR_RNDN);
  } else {
    mpfr_set_ui(acc, 0, MPFR_RNDN);
    mpfr_set_ui(power, 1, MPFR_RNDN);
    for (unsigned long n = 1; n <= 600; ++n) {
      mpfr_mul(power, power, x, MPFR_RNDN);
      mpfr_div_ui(term, power, n * n, MPFR_RNDN);
      const bool negate = kind == RateKind::boson && n % 2 == 0;
      if (negate) {
        mpfr_sub(acc, acc, term, MPFR_RNDN);
      } else {
        mpfr_add(acc, acc, term, MPFR_RNDN);
      }
    }
    if (kind == RateKind::boson) mpfr_div_ui(acc, acc, 2, MPFR_RNDN);
  }

  mpfr_mul(tmp, b, b, MPFR_RNDN);
  mpfr_mul(tmp, tmp, acc, MPFR_RNDN);
  mpfr_mul(tmp, tmp, w0, MPFR_RNDN);
  const double out = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clears(m, c, hb, b, pi, w0, x, acc, power, term, tmp,
              static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace

TEST_CASE("strong types enforce their domains") {
  CHECK_THROWS_MATCHES(ReducedField{0.0}, std::domain_error,
                       Catch::Matchers::Message("beta must be positive and finite"));
  CHECK_THROWS_AS(ReducedField{-1.0}, std::domain_error);
  CHECK_THROWS_AS(ReducedField{std::nan("")}, std::domain_error);
  CHECK_THROWS_AS(ReducedField{std::numeric_limits<double>::infinity()},
                  std::domain_error);
  CHECK_THROWS_AS(SpacetimeVolume{0.0}, std::domain_error);
  CHECK_THROWS_AS(SpacetimeVolume{-2.0}, std::domain_error);
  CHECK_THROWS_AS(vp::RateDensity{-1e-20}, std::domain_error);
  CHECK_THROWS_AS(vp::Probability{1.0000001}, std::domain_error);
  CHECK_THROWS_AS(vp::Probability{-0.1}, std::domain_error);
  CHECK_NOTHROW(vp::Probability{0.0});
  CHECK_NOTHROW(vp::Probability{1.0});
  CHECK_NOTHROW(vp::RateDensity{0.0});
}

TEST_CASE("exp_factor frozen values") {
  CHECK(rel_diff(vp::exp_factor(ReducedField{2.0}), 0.2078795763507619) <
        1e-15);
  CHECK(rel_diff(vp::exp_factor(ReducedField{1.0}), 0.04321391826377225) <
        1e-15);
}

TEST_CASE("rate_leading matches the 240-bit oracle") {
  const vc::DerivedScales s = electron_scales();
  for (double beta : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const double got = vp::rate_leading(ReducedField{beta}, s).value;
    CHECK(rel_diff(got, rate_mpfr(beta, RateKind::leading)) < 1e-13);
  }
  CHECK(rel_diff(vp::rate_leading(ReducedField{1.0}, s).value,
                 4.6975227347786246e48) < 1e-12);
  CHECK(rel_diff(vp::rate_leading(ReducedField{2.0}, s).value,
                 9.03893074488923e49) < 1e-12);
}

TEST_CASE("rate_full matches the 240-bit oracle for both statistics") {
  const vc::DerivedScales s = electron_scales();
  for (double beta : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const ReducedField f{beta};
    CHECK(rel_diff(vp::rate_full(f, Spin::half, s).value,
                   rate_mpfr(beta, RateKind::fermion)) < 1e-13);
    CHECK(rel_diff(vp::rate_full(f, Spin::zero, s).value,
                   rate_mpfr(beta, RateKind::boson)) < 1e-13);
  }
  CHECK(rel_diff(vp::rate_full(ReducedField{2.0}, Spin::half, s).value,
                 9.557949205638034e49) < 1e-12);
  CHECK(rel_diff(vp::rate_full(ReducedField{2.0}, Spin::zero, s).value,
                 4.304047462788561e49) < 1e-12);
  CHECK(rel_diff(vp::rate_full(ReducedField{0.05}, Spin::half, s).value,
                 1.4017100150244536e20) < 1e-12);
}

TEST_CASE("rate_full agrees with brute-force summation") {
  const vc::DerivedScales s = electron_scales();
  for (double beta : {0.3, 1.0, 3.0}) {
    const ReducedField f{beta};
    const double x = vp::exp_factor(f);
    const double fermion =
        s.w0 * beta * beta * oracles::dilog_partial_sum(x, +1, 1000000);
    const double boson =
        0.5 * s.w0 * beta * beta * oracles::dilog_partial_sum(x, -1, 1000000);
    CHECK(rel_diff(vp::rate_full(f, Spin::half, s).value, fermion) < 1e-12);
    CHECK(rel_diff(vp::rate_full(f, Spin::zero, s).value, boson) < 1e-12);
  }
}

TEST_CASE("series ratio frozen values and limits") {
  CHECK(rel_diff(vp::series_ratio(ReducedField{0.5}), 1.0004672485729238) <
        1e-13);
  CHECK(rel_diff(vp::series_ratio(ReducedField{2.0}), 1.0574203382454574) <
        1e-13);
  CHECK(rel_diff(vp::series_ratio(ReducedField{5.0}), 1.179732424834966) <
        1e-13);
  // Weak field: every correction term sits below double resolution.
  CHECK(vp::series_ratio(ReducedField{0.01}) == 1.0);
  // Strong-field limit approaches Li2(1) = pi^2/6.
  CHECK(std::fabs(vp::series_ratio(ReducedField{1e9}) - 1.6449340668482264) <
        1e-7);
}

TEST_CASE("series ratio is monotone and bounded") {
  const double pi_sq_6 = 1.6449340668482264;
  double prev = 1.0;
  for (double beta = 0.05; beta < 50.0; beta *= 1.37) {
    const double r = vp::series_ratio(ReducedField{beta});
    REQUIRE(r >= prev);
    REQUIRE(r >= 1.0);
    REQUIRE(r < pi_sq_6);
    prev = r;
  }
}

TEST_CASE("log-domain evaluation below the underflow knee") {
  const vc::DerivedScales s = electron_scales();

  // x = e^(-pi/beta) is subnormal here but the rate is representable.
  const double r1 = vp::rate_leading(ReducedField{0.0043}, s).value;
  CHECK(r1 > 1e-280);
  CHECK(r1 < 1e-265);
  CHECK(rel_diff(r1, rate_mpfr(0.0043, RateKind::leading)) < 5e-13);

  // Rate itself is below 1e-300: reported as exact zero.
  CHECK(vp::rate_leading(ReducedField{0.0039}, s).value == 0.0);
  CHECK(vp::rate_full(ReducedField{0.0039}, Spin::half, s).value == 0.0);
  CHECK(vp::rate_full(ReducedField{0.0039}, Spin::zero, s).value == 0.0);

  // Just above the floor: still positive.
  const double r2 = vp::rate_leading(ReducedField{0.0040}, s).value;
  CHECK(r2 > 0.0);
  CHECK(r2 < 1e-290);

  CHECK(vp::series_ratio(ReducedField{0.0039}) == 1.0);
  CHECK(vp::prob_pair(ReducedField{0.0039}, Spin::half, SpacetimeVolume{1.0},
                      s).value == 0.0);
}

TEST_CASE("pair probability frozen values") {
  const vc::DerivedScales s = electron_scales();
  const SpacetimeVolume unit{1.0};
  CHECK(rel_diff(
            vp::prob_pair(ReducedField{0.0275}, Spin::half, unit, s).value,
            0.0019988979416758488) < 1e-12);
  CHECK(std::fabs(
            vp::prob_pair(ReducedField{0.0295}, Spin::half, unit, s).value -
            0.9951031543931538) < 1e-12);
  // At beta_c the expected count is 1, so the probability is 1 - 1/e.
  CHECK(std::fabs(
            vp::prob_pair(ReducedField{0.029052396741790037}, Spin::half,
                          unit, s).value -
            0.6321205588285582) < 1e-10);
}

TEST_CASE("probability saturates and the linear form does not") {
  const vc::DerivedScales s = electron_scales();
  const SpacetimeVolume unit{1.0};
  const ReducedField f{0.04};
  CHECK(vp::prob_pair(f, Spin::half, unit, s).value == 1.0);
  CHECK(vp::prob_linear(f, Spin::half, unit, s) > 1e12);
}

TEST_CASE("prob_pair and prob_linear are consistent") {
  const vc::DerivedScales s = electron_scales();
  const SpacetimeVolume unit{1.0};
  for (double beta : {0.02, 0.027, 0.029, 0.031}) {
    const ReducedField f{beta};
    const double linear = vp::prob_linear(f, Spin::half, unit, s);
    const double pair = vp::prob_pair(f, Spin::half, unit, s).value;
    CHECK(rel_diff(pair, -std::expm1(-linear)) < 1e-14);
  }
  // Linearity in vt.
  const ReducedField f{0.028};
  CHECK(rel_diff(vp::prob_linear(f, Spin::half, SpacetimeVolume{100.0}, s),
                 100.0 * vp::prob_linear(f, Spin::half, SpacetimeVolume{1.0},
                                         s)) < 1e-15);
}

TEST_CASE("critical point matches frozen references and its own equation") {
  const vc::DerivedScales s = electron_scales();
  const vp::CriticalPoint cp = vp::critical_point(s, SpacetimeVolume{1.0});

  CHECK(rel_diff(cp.beta_c, 0.029052396741790037) < 1e-12);
  CHECK(rel_diff(cp.lambert_arg, 1.637730734421512e25) < 1e-13);
  CHECK(rel_diff(cp.lambert_w, 54.067701909612346) < 1e-13);
  CHECK(std::fabs(cp.residual) < 1e-10);
  CHECK(vp::beta_critical(s, SpacetimeVolume{1.0}) == cp.beta_c);
}

TEST_CASE("critical point agrees with an independent bisection") {
  const vc::DerivedScales s = electron_scales();
  for (double vt : {1e-6, 1.0, 1e6}) {
    const double beta_c = vp::beta_critical(s, SpacetimeVolume{vt});
    const double beta_bis = oracles::bisect(
        [&](double beta) {
          return std::log(s.w0 * vt) + 2.0 * std::log(beta) - kPi / beta;
        },
        0.01, 0.1);
    CHECK(std::fabs(beta_c - beta_bis) < 1e-12);
  }
}

TEST_CASE("critical point across forty decades of volume") {
  const vc::DerivedScales s = electron_scales();
  double prev = 1.0;
  for (double vt : {1e-20, 1e-12, 1e-4, 1.0, 1e4, 1e12, 1e20}) {
    const vp::CriticalPoint cp = vp::critical_point(s, SpacetimeVolume{vt});
    CHECK(std::fabs(cp.residual) < 1e-10);
    CHECK(cp.beta_c < prev);  // bigger volume, weaker critical field
    prev = cp.beta_c;
  }
  CHECK(rel_diff(vp::beta_critical(s, SpacetimeVolume{1e4}),
                 0.0268088281553755) < 1e-12);
  CHECK(rel_diff(vp::beta_critical(s, SpacetimeVolume{1e20}),
                 0.0204681821977202) < 1e-12);
  CHECK(rel_diff(vp::beta_critical(s, SpacetimeVolume{1e-20}),
                 0.0497408913728018) < 1e-12);
}

TEST_CASE("volume tradeoff") {
  // At beta = pi/ln(10) the exponential term contributes exactly k - 1
  // decades, so the k = 10 tradeoff is 2 + 9 = 11.
  const double special_beta = kPi / std::log(10.0);
  CHECK(vp::volume_tradeoff(ReducedField{special_beta}, 10.0) ==
        Catch::Approx(11.0).epsilon(1e-14));

  CHECK(vp::volume_tradeoff(ReducedField{1.0}, 1.0) == 0.0);
  CHECK(rel_diff(vp::volume_tradeoff(ReducedField{0.02934470737912478}, 10.0),
                 420.4532163136128) < 1e-12);

  double prev = -1.0;
  for (double k = 1.0; k <= 64.0; k *= 2.0) {
    const double t = vp::volume_tradeoff(ReducedField{0.5}, k);
    CHECK(t > prev);
    prev = t;
  }

  CHECK_THROWS_AS(vp::volume_tradeoff(ReducedField{1.0}, 0.999),
                  std::domain_error);
  CHECK_THROWS_AS(vp::volume_tradeoff(ReducedField{1.0}, -2.0),
                  std::domain_error);
  CHECK_THROWS_AS(vp::volume_tradeoff(ReducedField{1.0}, std::nan("")),
                  std::domain_error);
  CHECK_THROWS_AS(
      vp::volume_tradeoff(ReducedField{1.0},
                          std::numeric_limits<double>::infinity()),
      std::domain_error);
}

TEST_CASE("spin statistics ordering") {
  const vc::DerivedScales s = electron_scales();
  for (double beta : {0.1, 1.0, 10.0}) {
    const ReducedField f{beta};
    const double fermion = vp::rate_full(f, Spin::half, s).value;
    const double boson = vp::rate_full(f, Spin::zero, s).value;
    CHECK(boson < 0.5 * fermion);  // alternating series loses ground
    CHECK(boson > 0.25 * fermion);
  }
  // Weak field: exactly half, every correction underflows.
  const ReducedField weak{0.05};
  CHECK(vp::rate_full(weak, Spin::zero, s).value ==
        Catch::Approx(0.5 * vp::rate_full(weak, Spin::half, s).value)
            .epsilon(1e-14));
}

TEST_CASE("unitarity on a randomized grid") {
  const vc::DerivedScales s = electron_scales();
  std::mt19937_64 rng(424242u);
  std::uniform_real_distribution<double> beta_dist(0.005, 5.0);
  std::uniform_real_distribution<double> vt_decades(-12.0, 12.0);
  for (int i = 0; i < 1000; ++i) {
    const ReducedField f{beta_dist(rng)};
    const SpacetimeVolume v{std::pow(10.0, vt_decades(rng))};
    const Spin spin = (i % 2 == 0) ? Spin::half : Spin::zero;
    const double p = vp::prob_pair(f, spin, v, s).value;
    REQUIRE(p >= 0.0);
    REQUIRE(p <= 1.0);
    REQUIRE(p <= vp::prob_linear(f, spin, v, s) * (1.0 + 1e-15) + 1e-300);
  }
}
