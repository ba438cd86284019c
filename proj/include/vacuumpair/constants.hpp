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

#ifndef VACUUMPAIR_CONSTANTS_HPP_
#define VACUUMPAIR_CONSTANTS_HPP_

#include <cmath>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>

// Physical constants in Gaussian-CGS units, particle descriptions, and the
// two field scales derived from them: the critical field strength and the
// rate-density prefactor.

namespace vacuumpair::constants {

enum class Spin { zero, half };

inline double spin_degeneracy(Spin s) { return s == Spin::half ? 2.0 : 1.0; }

// Gaussian-CGS base set. alpha is stored redundantly with e_charge and must
// agree with e^2/(hbar c); validate() enforces that to 1e-6 relative.
struct PhysicalConstants {
  double hbar;           // erg s
  double c;              // cm s^-1
  double e_charge;       // statC
  double alpha;          // dimensionless
  double electron_mass;  // g
};

// CODATA 2018. The elementary charge is exact in coulombs; the statcoulomb
// value carries the (exact) factor c/10 from the unit conversion.
inline PhysicalConstants codata2018() {
  return {
      1.054571817e-27,        // hbar
      2.99792458e10,          // c
      4.803204712570263e-10,  // e_charge = 1.602176634e-19 C * c/10
      7.2973525693e-3,        // alpha
      9.1093837015e-28,       // electron_mass
  };
}

inline void validate(const PhysicalConstants& k) {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(k.hbar) || !positive(k.c) || !positive(k.e_charge) ||
      !positive(k.alpha) || !positive(k.electron_mass)) {
    throw std::domain_error("constants must be positive and finite");
  }
  const double alpha_from_charge = k.e_charge * k.e_charge / (k.hbar * k.c);
  if (std::fabs(alpha_from_charge / k.alpha - 1.0) > 1e-6) {
    throw std::domain_error(
        "inconsistent constants: alpha does not match e^2/(hbar c)");
  }
}

struct Particle {
  double mass;              // g
  double charge_magnitude;  // statC
  Spin spin;
  std::string label;
};

inline void validate(const Particle& p) {
  if (!(std::isfinite(p.mass) && p.mass > 0.0)) {
    throw std::domain_error("particle mass must be positive and finite");
  }
  if (!(std::isfinite(p.charge_magnitude) && p.charge_magnitude > 0.0)) {
    throw std::domain_error("particle charge must be positive and finite");
  }
}

inline Particle electron(const PhysicalConstants& k) {
  return {k.electron_mass, k.e_charge, Spin::half, "electron"};
}

// Field scales for one particle species.
//   e_cr: field at which the work over a Compton wavelength reaches the rest
//         energy, m^2 c^3 / (q hbar). Gaussian statvolt/cm converted to V/cm.
//   w0:   rate-density prefactor m^4 c^5 / (4 pi^3 hbar^4) in cm^-3 s^-1.
//         The particle charge cancels against the coupling, so w0 depends on
//         the mass alone.
struct DerivedScales {
  double e_cr;  // V cm^-1
  double w0;    // cm^-3 s^-1
};

inline constexpr double kVoltsPerStatvolt = 299.792458;  // exact
inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline DerivedScales derive_scales(const Particle& p,
                                   const PhysicalConstants& k) {
  validate(k);
  validate(p);
  const double mc = p.mass * k.c;
  const double e_cr_gauss = mc * mc * k.c / (p.charge_magnitude * k.hbar);
  const double mc_over_hbar = mc / k.hbar;  // inverse Compton wavelength
  const double w0 =
      std::pow(mc_over_hbar, 4) * k.c / (4.0 * kPi * kPi * kPi);
  return {e_cr_gauss * kVoltsPerStatvolt, w0};
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

inline double parse_number(const std::string& text, const std::string& key) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::domain_error("constants config: bad value for " + key);
  }
  if (used != text.size()) {
    throw std::domain_error("constants config: bad value for " + key);
  }
  return value;
}

}  // namespace detail

// Overrides applied to a base set, one "key = value" per line. Blank lines
// and lines starting with '#' are skipped. Keys: hbar, c, e_charge, alpha,
// electron_mass. The merged set is validated before being returned.
inline PhysicalConstants load_constants(std::istream& in,
                                        PhysicalConstants base = codata2018()) {
  std::string line;
  while (std::getline(in, line)) {
    const std::string stripped = detail::trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto sep = stripped.find('=');
    if (sep == std::string::npos) {
      throw std::domain_error("constants config: expected key=value, got \"" +
                              stripped + "\"");
    }
    const std::string key = detail::trim(stripped.substr(0, sep));
    const double value =
        detail::parse_number(detail::trim(stripped.substr(sep + 1)), key);
    if (key == "hbar") {
      base.hbar = value;
    } else if (key == "c") {
      base.c = value;
    } else if (key == "e_charge") {
      base.e_charge = value;
    } else if (key == "alpha") {
      base.alpha = value;
    } else if (key == "electron_mass") {
      base.electron_mass = value;
    } else {
      throw std::domain_error("constants config: unknown key \"" + key + "\"");
    }
  }
  validate(base);
  return base;
}

inline PhysicalConstants load_constants_file(
    const std::string& path, PhysicalConstants base = codata2018()) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open constants config: " + path);
  }
  return load_constants(in, base);
}

}  // namespace vacuumpair::constants

#endif  // VACUUMPAIR_CONSTANTS_HPP_
