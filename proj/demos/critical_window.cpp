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

// How sharp is the onset of pair creation? Print the critical reduced field
// for a few spacetime volumes, then walk the pair probability through the
// percent-wide window where it jumps from negligible to near certainty.

#include <cstdio>

#include "vacuumpair/constants.hpp"
#include "vacuumpair/physics.hpp"

int main() {
  namespace vc = vacuumpair::constants;
  namespace vp = vacuumpair::physics;

  const vc::PhysicalConstants k = vc::codata2018();
  const vc::DerivedScales scales = vc::derive_scales(vc::electron(k), k);

  std::printf("electron scales: E_cr = %.4e V/cm, w0 = %.4e cm^-3 s^-1\n\n",
              scales.e_cr, scales.w0);

  std::printf("%-12s %-12s %-14s\n", "vt [cm^3 s]", "beta_c", "E_c [V/cm]");
  for (double vt : {1e-12, 1.0, 1e12}) {
    const double beta_c = vp::beta_critical(scales, vp::SpacetimeVolume{vt});
    std::printf("%-12.0e %-12.6f %-14.4e\n", vt, beta_c, beta_c * scales.e_cr);
  }

  std::printf("\npair probability near beta_c (vt = 1 cm^3 s):\n");
  const vp::SpacetimeVolume unit{1.0};
  for (double beta = 0.0270; beta <= 0.03051; beta += 0.0005) {
    const vp::ReducedField f{beta};
    const double p = vp::prob_pair(f, vc::Spin::half, unit, scales).value;
    std::printf("  beta = %.4f   P = %.6f\n", beta, p);
  }
  return 0;
}
