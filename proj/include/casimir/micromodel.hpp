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

#include <complex>
#include <string>
#include <vector>

#include "casimir/dispersion.hpp"

// Homogenization of a square array of split double-sheet cylinders. All
// quantities are Gaussian (CGS): lengths in cm, resistivity in s/cm,
// capacitance per unit length dimensionless, frequencies in rad/s.
namespace casimir::micromodel {

struct CylinderArrayGeometry {
  double radius = 0.0;
  double sheet_gap = 0.0;
  double period = 0.0;
  double length = 0.0;
  double sheet_resistivity = 0.0;
  double capacitance_per_length = 0.0;
};

/// Throws InvalidParameter unless 0 < r < b/2, s > 0, L > 0, alpha >= 0, C > 0.
void validate(const CylinderArrayGeometry& geom);

/// Soft validity diagnostics: s/r and r/L should both be small.
struct ValidityDiagnostics {
  double gap_over_radius;
  double radius_over_length;
  std::vector<std::string> warnings;
};

inline constexpr double kSoftValidityThreshold = 0.1;

ValidityDiagnostics diagnostics(const CylinderArrayGeometry& geom);

/// Fraction pi r^2 / b^2 of the unit cell covered by a cylinder.
double filling_factor(const CylinderArrayGeometry& geom);

struct FieldState {
  std::complex<double> applied;
  std::complex<double> current_per_length;
  std::complex<double> h_inside;
  std::complex<double> h_outside;
};

/// Current per unit length induced on a cylinder by an applied axial field H
/// at frequency omega (RC-circuit response). Throws DomainError unless omega > 0.
std::complex<double> induced_current(const CylinderArrayGeometry& geom, std::complex<double> field,
                                     double omega);

/// Same response at an arbitrary complex frequency, no domain checks.
std::complex<double> induced_current_complex(const CylinderArrayGeometry& geom,
                                             std::complex<double> field,
                                             std::complex<double> omega);

/// Inside: H + J/c - f J/c. Outside: H - f J/c.
FieldState total_fields(const CylinderArrayGeometry& geom, std::complex<double> field,
                        std::complex<double> current);

/// mu_eff = B_ave / H_ave = H / h_outside with H = 1, built from the field chain.
/// Throws DomainError unless omega > 0 and PoleError if h_outside vanishes.
std::complex<double> effective_mu_from_fields(const CylinderArrayGeometry& geom, double omega);

/// Field-chain permeability at a complex frequency (e.g. omega = i xi).
std::complex<double> effective_mu_complex(const CylinderArrayGeometry& geom,
                                          std::complex<double> omega);

/// f = pi r^2 / b^2, omega_m = c / sqrt(pi r^2 C), gamma_m = alpha c^2 / r.
PendryEffParams geometry_to_params(const CylinderArrayGeometry& geom);

}  // namespace casimir::micromodel
