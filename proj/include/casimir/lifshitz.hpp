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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "casimir/dispersion.hpp"
#include "casimir/error.hpp"

namespace casimir {

/// Tolerances and truncation of the (xi, u = 2 K3 d) integral. The outer
/// variable is t = 2 xi d / c; both t and u are cut off where e^{-u} makes the
/// remainder negligible.
struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;
  int max_subdivisions = 200;
  double xi_cutoff_factor = 60.0;
  double u_cutoff = 60.0;
};

/// Cutoffs below this are rejected: e^{-30} * 30^3 is already ~ 2.5e-9.
inline constexpr double kMinCutoff = 30.0;

void validate(const QuadratureSpec& spec);

/// Pressure in internal units (hbar Omega / Lambda^3); positive = attraction.
struct PressureResult {
  double total = 0.0;
  double te_part = 0.0;
  double tm_part = 0.0;
  double error_estimate = 0.0;
  std::size_t node_count = 0;
  /// Integrand samples with a negative polarization term; only counted when
  /// ExecutionOptions::check_integrand_sign is set.
  std::size_t negative_samples = 0;
};

struct ExecutionOptions {
  int threads = 1;
  bool check_integrand_sign = false;
};

class PressureNonConvergence : public NonConvergenceError {
 public:
  PressureNonConvergence(const std::string& what, const PressureResult& partial)
      : NonConvergenceError(what, partial.total, partial.error_estimate), partial_(partial) {}
  const PressureResult& partial() const noexcept { return partial_; }

 private:
  PressureResult partial_;
};

/// Lifshitz pressure between two half-spaces across a vacuum gap d (units of
/// Lambda). Throws DomainError for d <= 0 and PressureNonConvergence when the
/// adaptive budget is exhausted. The result does not depend on threads.
PressureResult pressure(const HalfSpaceMaterial& left, const HalfSpaceMaterial& right,
                        double distance, const QuadratureSpec& spec = {},
                        const ExecutionOptions& exec = {});

struct SweepPoint {
  double distance = 0.0;
  PressureResult result;
  bool converged = true;
  std::string message;
};

/// One pressure() per distance; distances must be strictly increasing and
/// positive. Non-converged points are flagged, never thrown. Distances are
/// distributed over exec.threads workers.
std::vector<SweepPoint> pressure_sweep(const HalfSpaceMaterial& left,
                                       const HalfSpaceMaterial& right,
                                       std::span<const double> distances,
                                       const QuadratureSpec& spec = {},
                                       const ExecutionOptions& exec = {});

/// pi^2 hbar c / (240 d^4) in internal units: two perfect mirrors.
double ideal_mirror_pressure(double distance);

}  // namespace casimir
