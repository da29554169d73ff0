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

#include "casimir/micromodel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "casimir/error.hpp"
#include "casimir/units.hpp"

namespace casimir::micromodel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kC = units::kSpeedOfLightCGS;
constexpr std::complex<double> kI{0.0, 1.0};

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

void validate(const CylinderArrayGeometry& g) {
  if (!positive(g.radius)) throw InvalidParameter("geometry: radius must be > 0");
  if (!positive(g.period)) throw InvalidParameter("geometry: period must be > 0");
  if (!(2.0 * g.radius < g.period)) {
    throw InvalidParameter("geometry: cylinders overlap (radius must be < period / 2)");
  }
  if (!positive(g.sheet_gap)) throw InvalidParameter("geometry: sheet gap must be > 0");
  if (!positive(g.length)) throw InvalidParameter("geometry: length must be > 0");
  if (!std::isfinite(g.sheet_resistivity) || g.sheet_resistivity < 0.0) {
    throw InvalidParameter("geometry: sheet resistivity must be >= 0");
  }
  if (!positive(g.capacitance_per_length)) {
    throw InvalidParameter("geometry: capacitance per length must be > 0");
  }
}

ValidityDiagnostics diagnostics(const CylinderArrayGeometry& g) {
  ValidityDiagnostics d{g.sheet_gap / g.radius, g.radius / g.length, {}};
  auto warn = [&](const char* name, double value) {
    if (value > kSoftValidityThreshold) {
      std::ostringstream os;
      os << name << " = " << value << " exceeds " << kSoftValidityThreshold;
      d.warnings.push_back(os.str());
    }
  };
  warn("s/r", d.gap_over_radius);
  warn("r/L", d.radius_over_length);
  return d;
}

double filling_factor(const CylinderArrayGeometry& g) {
  return kPi * g.radius * g.radius / (g.period * g.period);
}

std::complex<double> induced_current_complex(const CylinderArrayGeometry& g,
                                             std::complex<double> field,
                                             std::complex<double> omega) {
  const double r = g.radius;
  const double f = filling_factor(g);
  // 2 pi alpha c / (pi r) simplifies to 2 alpha c / r.
  const std::complex<double> denominator = 2.0 * g.sheet_resistivity * kC / r -
                                           kC / (kI * omega * g.capacitance_per_length * kPi * r * r) -
                                           (kI * omega / kC) * (1.0 - f);
  return kI * omega * field / denominator;
}

std::complex<double> induced_current(const CylinderArrayGeometry& g, std::complex<double> field,
                                     double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("induced_current: omega must be finite and > 0");
  }
  return induced_current_complex(g, field, omega);
}

FieldState total_fields(const CylinderArrayGeometry& g, std::complex<double> field,
                        std::complex<double> current) {
  const double f = filling_factor(g);
  const std::complex<double> self = current / kC;
  return FieldState{field, current, field + self - f * self, field - f * self};
}

std::complex<double> effective_mu_complex(const CylinderArrayGeometry& g,
                                          std::complex<double> omega) {
  constexpr std::complex<double> h{1.0, 0.0};
  const FieldState s = total_fields(g, h, induced_current_complex(g, h, omega));
  if (s.h_outside == 0.0) {
    throw PoleError("effective_mu: averaged H vanishes (undamped resonance)");
  }
  // B is flux-averaged over the cell face, H is line-averaged along a cell edge.
  return s.applied / s.h_outside;
}

std::complex<double> effective_mu_from_fields(const CylinderArrayGeometry& g, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("effective_mu_from_fields: omega must be finite and > 0");
  }
  return effective_mu_complex(g, omega);
}

PendryEffParams geometry_to_params(const CylinderArrayGeometry& g) {
  validate(g);
  const double r = g.radius;
  PendryEffParams p{filling_factor(g), std::sqrt(kC * kC / (kPi * r * r * g.capacitance_per_length)),
                    g.sheet_resistivity * kC * kC / r};
  if (!(p.filling_factor < 1.0)) {
    throw InvalidParameter("geometry_to_params: filling factor must be < 1");
  }
  validate(p);
  return p;
}

}  // namespace casimir::micromodel
