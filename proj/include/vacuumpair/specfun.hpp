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

#ifndef VACUUMPAIR_SPECFUN_HPP_
#define VACUUMPAIR_SPECFUN_HPP_

#include <cmath>
#include <limits>
#include <stdexcept>

// Real-axis special functions: the dilogarithm Li2, the Rogers dilogarithm L,
// and the principal branch of the Lambert W function. Everything is a pure
// function of its arguments and safe for unrestricted concurrent use.

namespace vacuumpair::specfun {

// A function value together with a conservative bound on its absolute error.
// est_abs_error is non-negative and finite whenever value is finite.
struct EvalResult {
  double value = 0.0;
  double est_abs_error = 0.0;
};

namespace detail {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kPiSqOver6 = 1.644934066848226436472415166646025189;
inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// sum_{n>=1} t^n / n^2 for |t| <= 1/2. Geometric decay with ratio <= 1/2
// keeps the term count below ~50 for full double precision. Truncates when
// the next term drops below 1e-16 of the partial sum; the error estimate is
// the geometric bound on the omitted tail.
inline EvalResult li2_power_series(double t) {
  if (t == 0.0) return {0.0, 0.0};
  double sum = t;
  double power = t;
  for (int n = 2; n <= 200; ++n) {
    power *= t;
    sum += power / (static_cast<double>(n) * n);
    const double next = std::fabs(power * t) / ((n + 1.0) * (n + 1.0));
    if (next < 1e-16 * std::fabs(sum)) {
      return {sum, next / (1.0 - std::fabs(t))};
    }
  }
  return {sum, std::fabs(power)};
}

// Argument reduction into [-1/2, 1/2] where the power series converges fast:
//   x in (1/2, 1]   Euler reflection   Li2(x) = pi^2/6 - ln(x)ln(1-x) - Li2(1-x)
//   x in [-1, -1/2) square identity    Li2(x) = Li2(x^2)/2 - Li2(-x)
// The second case recurses at most once more through the first.
inline EvalResult li2_reduced(double x) {
  if (x == 1.0) return {kPiSqOver6, 2.0 * kEps};
  if (x > 0.5) {
    const double u = 1.0 - x;  // exact: x and 1 share a binade
    const EvalResult tail = li2_power_series(u);
    const double logs = std::log1p(-u) * std::log(u);
    const double value = kPiSqOver6 - logs - tail.value;
    return {value, tail.est_abs_error + 2.0 * kEps * (kPiSqOver6 + std::fabs(logs))};
  }
  if (x < -0.5) {
    const EvalResult square = li2_reduced(x * x);
    const EvalResult flipped = li2_reduced(-x);
    const double value = 0.5 * square.value - flipped.value;
    return {value, 0.5 * square.est_abs_error + flipped.est_abs_error +
                       2.0 * kEps * std::fabs(value)};
  }
  return li2_power_series(x);
}

}  // namespace detail

// Dilogarithm Li2(x) = sum_{n>=1} x^n/n^2 = -int_0^x ln(1-t)/t dt on the real
// interval [-1, 1]. Arguments above 1 leave the real branch and arguments
// below -1 would need the inversion identity; both are rejected.
// The absolute error estimate stays below 1e-14 on the whole domain.
inline EvalResult li2(double x) {
  if (std::isnan(x)) throw std::domain_error("li2: argument is NaN");
  if (x > 1.0) throw std::domain_error("li2: argument above 1 is off the real branch");
  if (x < -1.0) throw std::domain_error("li2: argument below -1 is not supported");
  return detail::li2_reduced(x);
}

// Rogers dilogarithm L(x) = Li2(x) + ln(x)ln(1-x)/2 on [0, 1]. The endpoint
// values 0 and pi^2/6 are the limits of the defining expression and are
// returned as exact constants, sidestepping the 0*inf product.
inline EvalResult rogers_l(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("rogers_l: argument must lie in [0, 1]");
  }
  if (x == 0.0) return {0.0, 0.0};
  if (x == 1.0) return {detail::kPiSqOver6, 2.0 * detail::kEps};
  const EvalResult base = detail::li2_reduced(x);
  const double logs = 0.5 * std::log(x) * std::log1p(-x);
  const double value = base.value + logs;
  return {value, base.est_abs_error +
                     2.0 * detail::kEps * (std::fabs(logs) + std::fabs(value))};
}

// Five-term truncation of the large-argument expansion of W(a),
//   W = L1 - L2 + L2/L1 + L2(L2-2)/(2 L1^2) + L2(2 L2^2 - 9 L2 + 6)/(6 L1^3),
// with L1 = ln a and L2 = ln ln a. Requires a >= e so that L2 >= 0. At a = e
// every correction term vanishes and the result is exactly 1. The truncation
// error is O((L2/L1)^4); below ~1e-5 relative for a >= 1e20.
inline double lambert_w0_asymptotic(double a) {
  constexpr double kE = 2.718281828459045235360287471352662498;
  if (!(a >= kE)) {
    throw std::domain_error("lambert_w0_asymptotic: argument must be >= e");
  }
  const double l1 = std::log(a);
  const double l2 = std::log(l1);
  return l1 - l2 + l2 / l1 + l2 * (l2 - 2.0) / (2.0 * l1 * l1) +
         l2 * (2.0 * l2 * l2 - 9.0 * l2 + 6.0) / (6.0 * l1 * l1 * l1);
}

// Principal branch W0 on [0, inf): the solution w >= 0 of w e^w = a.
// Seeded with the asymptotic expansion for a >= e and with log1p(a) below,
// then refined by a third-order Halley iteration on f(w) = w e^w - a until
// the relative step falls under 1e-15 (at most 20 iterations). No overflow:
// e^w <= a/w for the roots visited here.
inline EvalResult lambert_w0(double a) {
  constexpr double kE = 2.718281828459045235360287471352662498;
  if (std::isnan(a)) throw std::domain_error("lambert_w0: argument is NaN");
  if (a < 0.0) throw std::domain_error("lambert_w0: argument must be non-negative");
  if (a == 0.0) return {0.0, 0.0};

  double w = (a >= kE) ? lambert_w0_asymptotic(a) : std::log1p(a);
  double step = 0.0;
  for (int iter = 0; iter < 20; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - a;
    const double fp = ew * (w + 1.0);
    step = f / (fp - f * (w + 2.0) / (2.0 * (w + 1.0)));
    if (w - step <= 0.0) step = 0.5 * w;  // keep the iterate on the branch
    w -= step;
    if (std::fabs(step) <= 1e-15 * w) break;
  }
  return {w, std::fabs(step) + 2.0 * detail::kEps * w};
}

}  // namespace vacuumpair::specfun

#endif  // VACUUMPAIR_SPECFUN_HPP_
