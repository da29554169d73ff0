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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "casimir/dispersion.hpp"
#include "casimir/fresnel.hpp"
#include "casimir/micromodel.hpp"

namespace casimir::analysis {

/// Logarithmic grid in xi and k_par, scanned row-major (ascending xi, then
/// ascending k_par).
struct LogGridSpec {
  double xi_min = 1e-3;
  double xi_max = 1e3;
  int xi_count = 100;
  double k_min = 1e-3;
  double k_max = 1e3;
  int k_count = 100;
};

inline constexpr int kMinGridCount = 32;

/// n log-spaced values from lo to hi inclusive; n == 1 yields {lo}.
std::vector<double> log_space(double lo, double hi, int n);

enum class Verdict { NoRepulsionPossible, RepulsionCandidate };
enum class Polarization { TE, TM };

const char* to_string(Verdict v);
const char* to_string(Polarization p);

struct Witness {
  double xi;
  double k_par;
  Polarization polarization;
  double product;  // r_left * r_right, < 0
};

struct ScanSample {
  double xi;
  double k_par;
  ReflectionPair left;
  ReflectionPair right;
};

struct FeasibilityReport {
  Verdict verdict = Verdict::NoRepulsionPossible;
  std::optional<Witness> witness;
  LogGridSpec grid;
  std::size_t samples_checked = 0;  // grid points times polarizations
  /// True when the sign pattern r_te <= 0 <= r_tm is guaranteed for both
  /// materials by their model bounds (mu(i xi) <= 1 <= eps(i xi)), not just
  /// observed on the grid.
  bool analytic = false;
  double min_product = std::numeric_limits<double>::infinity();
  std::vector<ScanSample> samples;  // filled only on request
};

/// True when the model bounds force mu(i xi) <= 1 <= eps(i xi) for every xi.
bool sign_pattern_guaranteed(const HalfSpaceMaterial& m);

/// Scans both polarizations over the grid for r_left * r_right < 0. Requires
/// at least 32 x 32 points, with each axis covering [1e-3, 1e3].
FeasibilityReport repulsion_feasibility(const HalfSpaceMaterial& left,
                                        const HalfSpaceMaterial& right, const LogGridSpec& grid,
                                        bool keep_samples = false);

enum class Dominance { MainlyElectric, MainlyMagnetic, Mixed };

const char* to_string(Dominance d);

struct RuleOfThumbReport {
  std::vector<double> xi;
  std::vector<Dominance> classes;
  double fraction_electric = 0.0;
  double fraction_magnetic = 0.0;
  double fraction_mixed = 0.0;
};

/// Compares mu(i xi) with eps(i xi) pointwise; exact ties are Mixed.
RuleOfThumbReport rule_of_thumb(const HalfSpaceMaterial& material, std::span<const double> xi);

struct AnalyticityResult {
  bool pass;
  double filling_factor;
  double margin;  // 1 - f
};

/// mu_eff(i xi) stays positive iff f < 1, i.e. r/b < 1/sqrt(pi).
AnalyticityResult analyticity_check(const micromodel::CylinderArrayGeometry& geom);
/// Accepts raw parameters, including ones that violate PendryEffParams.
AnalyticityResult analyticity_check(const PendryEffParams& params);

struct OmegaGrid {
  double min = 1e-3;
  double max = 10.0;
  int count = 200;
};

/// Principal-value quadrature for the dispersion integrals: composite
/// Gauss-Legendre on geometrically graded panels, with the pole subtracted
/// on a window [w (1 - window_fraction), w (1 + window_fraction)].
struct PVQuadratureSpec {
  int panels_per_decade = 32;
  int gauss_order = 8;
  double window_fraction = 0.5;
  /// Decades below / above the grid and resonance covered by panels; the
  /// remaining [Y, inf) is folded onto (0, 1] by y = Y / s.
  double decades_below = 8.0;
  double decades_above = 8.0;
  /// Upper bound on the refinement error estimate before NonConvergenceError.
  double max_error = 0.1;
};

struct KKReport {
  std::vector<double> omega;
  std::vector<double> residual_real;  // relative to |mu - (1 - f)|
  std::vector<double> residual_imag;
  double max_residual_real = 0.0;
  double max_residual_imag = 0.0;
  double max_abs_residual_real = 0.0;
  double max_abs_residual_imag = 0.0;
  double asymptote_used = 1.0;
  /// Max relative change of either reconstruction between panels_per_decade
  /// and half of it.
  double pv_error_estimate = 0.0;
  /// Grid frequencies whose subtraction window contains the resonance.
  std::size_t pole_window_warnings = 0;
  OmegaGrid grid;
};

/// Note emitted with every report: the relations are the subtracted pair
/// with the high-frequency asymptote 1 - f.
extern const char* const kKKRelationNote;

/// Reconstructs mu' from mu'' (and mu'' from mu') with the subtracted
/// Kramers-Kronig pair and reports residuals against the closed form.
/// Requires 0 <= f < 1, resonance > 0 and dissipation > 0. `asymptote`
/// overrides the subtraction constant (default 1 - f).
KKReport kk_check(const PendryEffParams& params, const OmegaGrid& grid,
                  const PVQuadratureSpec& pv = {}, std::optional<double> asymptote = {});

}  // namespace casimir::analysis
