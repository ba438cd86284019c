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

#ifndef VACUUMPAIR_PHYSICS_HPP_
#define VACUUMPAIR_PHYSICS_HPP_

#include <cfloat>
#include <cmath>
#include <stdexcept>

#include "vacuumpair/constants.hpp"
#include "vacuumpair/specfun.hpp"

// Pair-creation observables for a constant electric field, parametrized by
// the reduced field beta = E / E_cr. The instanton series
//
//   rate(beta) ~ w0 * beta^2 * sum_n (+-1)^(n+1) e^(-n pi/beta) / n^2
//
// (upper signs for spin 1/2, lower signs with an extra factor 1/2 for
// spin 0) is summed exactly: it collapses into Li2(+-x) with
// x = e^(-pi/beta).

namespace vacuumpair::physics {

using constants::DerivedScales;
using constants::Spin;

// Dimensionless field strength E / E_cr. Strictly positive; zero field has
// no finite instanton action and every observable below vanishes there
// trivially.
struct ReducedField {
  double beta;
  explicit ReducedField(double b) : beta(b) {
    if (!(std::isfinite(b) && b > 0.0)) {
      throw std::domain_error("beta must be positive and finite");
    }
  }
};

// Interaction volume times duration, in cm^3 s.
struct SpacetimeVolume {
  double vt;
  explicit SpacetimeVolume(double v) : vt(v) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw std::domain_error("vt must be positive and finite");
    }
  }
};

// Pairs per unit volume per unit time, cm^-3 s^-1.
struct RateDensity {
  double value;
  explicit RateDensity(double r) : value(r) {
    if (std::isnan(r) || r < 0.0) {
      throw std::domain_error("rate density must be non-negative");
    }
  }
};

struct Probability {
  double value;
  explicit Probability(double p) : value(p) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::domain_error("probability must lie in [0, 1]");
    }
  }
};

namespace detail {

inline constexpr double kPi = constants::kPi;

// exp(t) with a hard floor at 1e-300: rates that small are reported as an
// exact zero rather than as denormal noise. The cutoff sits safely above
// the subnormal range.
inline double exp_floored(double t) {
  constexpr double kLogFloor = -690.77552789821368;  // ln(1e-300)
  return t < kLogFloor ? 0.0 : std::exp(t);
}

// ln(w0 beta^2 e^(-pi/beta)), finite for any positive beta and w0.
inline double log_rate_leading(const ReducedField& f, const DerivedScales& s) {
  return std::log(s.w0) + 2.0 * std::log(f.beta) - kPi / f.beta;
}

}  // namespace detail

// Boltzmann-like suppression factor x = e^(-pi/beta), the expansion variable
// of the instanton series. Underflows to zero for beta below ~pi/745.
inline double exp_factor(const ReducedField& f) {
  return std::exp(-detail::kPi / f.beta);
}

// One-instanton (leading) rate density w0 * beta^2 * x. Evaluated in the log
// domain when x underflows, so the result stays faithful down to 1e-300 and
// is zero below that.
inline RateDensity rate_leading(const ReducedField& f,
                                const DerivedScales& s) {
  const double x = exp_factor(f);
  if (x >= DBL_MIN) {
    const double r = s.w0 * (f.beta * f.beta) * x;
    if (std::isfinite(r)) return RateDensity{r};
  }
  return RateDensity{detail::exp_floored(detail::log_rate_leading(f, s))};
}

// All-orders rate density. The alternating (spin 0) and monotone (spin 1/2)
// series are summed in closed form through the dilogarithm:
//   spin 1/2:  w0 beta^2 Li2(x)
//   spin 0:    w0 beta^2 (-Li2(-x)) / 2
// Once x is below DBL_MIN the higher instanton terms are beyond double
// resolution and the log-domain leading term (halved for spin 0) is exact
// to working precision.
inline RateDensity rate_full(const ReducedField& f, Spin spin,
                             const DerivedScales& s) {
  const double x = exp_factor(f);
  if (x >= DBL_MIN) {
    const double series = spin == Spin::half
                              ? specfun::li2(x).value
                              : -0.5 * specfun::li2(-x).value;
    const double r = s.w0 * (f.beta * f.beta) * series;
    if (std::isfinite(r)) return RateDensity{r};
  }
  double t = detail::log_rate_leading(f, s);
  if (spin == Spin::zero) t -= 0.693147180559945309417232121458176568;  // ln 2
  return RateDensity{detail::exp_floored(t)};
}

// Multi-instanton enhancement R = Li2(x)/x for spin 1/2: the factor by which
// the full rate exceeds the leading one. Tends to 1 as beta -> 0 and to
// pi^2/6 as beta -> inf. Equals 1 exactly once x underflows.
inline double series_ratio(const ReducedField& f) {
  const double x = exp_factor(f);
  if (x < DBL_MIN) return 1.0;
  return specfun::li2(x).value / x;
}

// First-order (unclamped) expected pair count rate * vt. May exceed 1; that
// is the signal that the linear treatment has broken down.
inline double prob_linear(const ReducedField& f, Spin spin,
                          const SpacetimeVolume& v, const DerivedScales& s) {
  return rate_full(f, spin, s).value * v.vt;
}

// Probability of at least one pair in the spacetime volume, the unitarized
// form 1 - e^(-rate * vt). Computed through expm1 so the small-rate limit
// degrades gracefully into prob_linear.
inline Probability prob_pair(const ReducedField& f, Spin spin,
                             const SpacetimeVolume& v,
                             const DerivedScales& s) {
  const double expected = rate_full(f, spin, s).value * v.vt;
  return Probability{-std::expm1(-expected)};
}

// Solution of the critical-field condition w0 beta^2 e^(-pi/beta) vt = 1 in
// the leading-term convention: one expected pair in the volume. Closed form
// through the Lambert W principal branch,
//   beta_c = e^W(A) / sqrt(w0 vt),  A = (pi/2) sqrt(w0 vt).
// residual reports how well the returned beta_c satisfies the defining
// condition, as w0 beta_c^2 e^(-pi/beta_c) vt - 1 evaluated in log form.
struct CriticalPoint {
  double beta_c;
  double lambert_arg;  // A
  double lambert_w;    // W(A)
  double residual;
};

inline CriticalPoint critical_point(const DerivedScales& s,
                                    const SpacetimeVolume& v) {
  const double product = s.w0 * v.vt;
  const double root = std::isfinite(product)
                          ? std::sqrt(product)
                          : std::exp(0.5 * (std::log(s.w0) + std::log(v.vt)));
  const double arg = 0.5 * detail::kPi * root;
  const double w = specfun::lambert_w0(arg).value;
  const double beta_c = std::exp(w) / root;
  const double log_expected = std::log(s.w0) + std::log(v.vt) +
                              2.0 * std::log(beta_c) - detail::kPi / beta_c;
  return {beta_c, arg, w, std::expm1(log_expected)};
}

inline double beta_critical(const DerivedScales& s, const SpacetimeVolume& v) {
  return critical_point(s, v).beta_c;
}

// Price of spreading the same expected pair yield over a k-fold weaker field:
// the spacetime volume must grow by k^2 e^((k-1) pi/beta). Returned as
// log10 of that factor, which reaches hundreds of decades for interesting
// beta. k = 1 gives 0.
inline double volume_tradeoff(const ReducedField& f, double field_reduction) {
  if (!(std::isfinite(field_reduction) && field_reduction >= 1.0)) {
    throw std::domain_error("field reduction factor must be >= 1");
  }
  constexpr double kLn10 = 2.302585092994045684017991454684364208;
  return 2.0 * std::log10(field_reduction) +
         (field_reduction - 1.0) * detail::kPi / (f.beta * kLn10);
}

}  // namespace vacuumpair::physics

#endif  // VACUUMPAIR_PHYSICS_HPP_
