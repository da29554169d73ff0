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

#include <numbers>

// Internal unit system: frequencies in multiples of a scale frequency Omega,
// lengths in multiples of Lambda = 2 pi c / Omega, hbar = 1. Pressures are
// therefore in units of hbar * Omega / Lambda^3.
namespace casimir::units {

inline constexpr double kHbar = 1.054571817e-34;        // J s
inline constexpr double kSpeedOfLightSI = 2.99792458e8;  // m / s
inline constexpr double kSpeedOfLightCGS = 2.99792458e10;  // cm / s

/// Default scale frequency in rad/s.
inline constexpr double kDefaultScaleFrequency = 1.43e16;

/// Speed of light expressed in Lambda * Omega.
inline constexpr double kSpeedOfLight = 1.0 / (2.0 * std::numbers::pi);

/// Gaussian resistance unit (s/cm) expressed in ohm.
inline constexpr double kStatohm = 8.9875517873681764e11;
/// Gaussian capacitance unit (cm) expressed in farad.
inline constexpr double kStatfarad = 1.0 / 8.9875517873681764e11;

/// Lambda = 2 pi c / Omega, in metres.
constexpr double lambda_metres(double scale_frequency) {
  return 2.0 * std::numbers::pi * kSpeedOfLightSI / scale_frequency;
}

/// One internal pressure unit, in pascal.
constexpr double pressure_unit_pa(double scale_frequency) {
  const double l = lambda_metres(scale_frequency);
  return kHbar * scale_frequency / (l * l * l);
}

}  // namespace casimir::units
