/*
 * Copyright 2026 The casimir-lifshitz Authors
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

#pragma once

#include "casimir/dispersion.hpp"

namespace casimir {

/// A point (i xi, k_par) of the imaginary-frequency / transverse-wavevector plane.
struct ImagFreqPoint {
  double xi = 0.0;
  double k_par = 0.0;
};

struct ReflectionPair {
  double r_te = 0.0;
  double r_tm = 0.0;
};

/// Sign-carrying numerators of the reflection coefficients:
/// te = mu K3 - K_med and tm = eps K3 - K_med.
struct ReflectionNumerators {
  double te = 0.0;
  double tm = 0.0;
};

/// K3 = sqrt(k_par^2 + xi^2 / c^2), internal units.
double k3(const ImagFreqPoint& point);

/// Reflection coefficients of a half-space with response (eps, mu) already
/// evaluated at i xi. Works in any consistent wavenumber scaling:
/// k_par_sq is k_par^2 and q_sq is xi^2 / c^2. The numerators are evaluated
/// in rationalized form so that their sign is exact even when K3 and K_med
/// agree to many digits.
ReflectionPair reflection_from_response(double eps, double mu, double k_par_sq, double q_sq);

ReflectionNumerators numerators_from_response(double eps, double mu, double k_par_sq, double q_sq);

/// TE and TM reflection coefficients at (i xi, k_par).
/// Throws DomainError (from eval_imag) unless xi > 0 and k_par >= 0.
ReflectionPair reflection(const HalfSpaceMaterial& material, const ImagFreqPoint& point);

ReflectionNumerators reflection_numerators(const HalfSpaceMaterial& material,
                                           const ImagFreqPoint& point);

}  // namespace casimir
