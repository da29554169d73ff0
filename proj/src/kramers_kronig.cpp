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

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "casimir/analysis.hpp"
#include "casimir/error.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::analysis {

const char* const kKKRelationNote =
    "subtracted Kramers-Kronig pair with high-frequency asymptote 1-f: "
    "mu'(w) = A + (2/pi) P int_0^inf y mu''(y) / (y^2 - w^2) dy, "
    "mu''(w) = -(2w/pi) P int_0^inf (mu'(y) - A) / (y^2 - w^2) dy; "
    "the form with (mu''(y) - 1) in the first integrand diverges and is not used";

namespace {

constexpr double kPi = std::numbers::pi;

// P int_0^inf h(y) / (y^2 - w^2) dy on a fixed panel layout.
class PrincipalValue {
 public:
  PrincipalValue(const PVQuadratureSpec& spec, int panels_per_decade, double y_lo, double y_hi)
      : spec_(spec), ppd_(panels_per_decade), y_lo_(y_lo), y_hi_(y_hi),
        gl_(quadrature::gauss_legendre(spec.gauss_order)) {}

  template <class H>
  double operator()(const H& h, double w) const {
    const double delta = spec_.window_fraction * w;
    const double a = w - delta;
    const double b = w + delta;
    const double hw = h(w);
    auto direct = [&](double y) { return h(y) / ((y - w) * (y + w)); };
    auto subtracted = [&](double y) { return (h(y) - hw) / ((y - w) * (y + w)); };

    double sum = panel(direct, 0.0, y_lo_);
    sum += graded(direct, y_lo_, a);
    sum += graded(subtracted, a, w);
    sum += graded(subtracted, w, b);
    // P int_a^b dy / (y^2 - w^2) = ln((2w - delta) / (2w + delta)) / (2w).
    sum += hw * std::log((2.0 * w - delta) / (2.0 * w + delta)) / (2.0 * w);
    sum += graded(direct, b, y_hi_);
    // [Y, inf) with y = Y / s: h(Y/s) Y / (Y^2 - w^2 s^2) ds on (0, 1].
    const double Y = y_hi_;
    sum += panel([&](double s) { return h(Y / s) * Y / (Y * Y - w * w * s * s); }, 0.0, 1.0);
    return sum;
  }

 private:
  template <class F>
  double panel(const F& f, double lo, double hi) const {
    const double c = 0.5 * (lo + hi);
    const double r = 0.5 * (hi - lo);
    double s = 0.0;
    for (std::size_t i = 0; i < gl_.nodes.size(); ++i) s += gl_.weights[i] * f(c + r * gl_.nodes[i]);
    return s * r;
  }

  // Geometrically graded panels, ppd_ per decade (at least one).
  template <class F>
  double graded(const F& f, double lo, double hi) const {
    if (!(hi > lo)) return 0.0;
    const int n = std::max(1, static_cast<int>(std::ceil(ppd_ * std::log10(hi / lo))));
    const double ratio = std::pow(hi / lo, 1.0 / n);
    double s = 0.0;
    double left = lo;
    for (int i = 0; i < n; ++i) {
      const double right = (i + 1 == n) ? hi : left * ratio;
      s += panel(f, left, right);
      left = right;
    }
    return s;
  }

  PVQuadratureSpec spec_;
  int ppd_;
  double y_lo_;
  double y_hi_;
  quadrature::GaussLegendre gl_;
};

struct Reconstruction {
  std::vector<double> real;
  std::vector<double> imag;
};

}  // namespace

KKReport kk_check(const PendryEffParams& p, const OmegaGrid& grid, const PVQuadratureSpec& pv,
                  std::optional<double> asymptote) {
  if (!(p.filling_factor >= 0.0 && p.filling_factor < 1.0)) {
    throw InvalidParameter("kk_check: filling factor must satisfy 0 <= f < 1");
  }
  if (!(p.resonance > 0.0) || !std::isfinite(p.resonance)) {
    throw InvalidParameter("kk_check: resonance must be > 0");
  }
  if (!(p.dissipation > 0.0) || !std::isfinite(p.dissipation)) {
    throw PoleError("kk_check: dissipation must be > 0 (undamped model has a real-axis pole)");
  }
  if (pv.panels_per_decade < 2 || pv.gauss_order < 1 || !(pv.window_fraction > 0.0) ||
      !(pv.window_fraction < 1.0) || !(pv.decades_below > 0.0) || !(pv.decades_above > 0.0)) {
    throw InvalidParameter("kk_check: invalid principal-value quadrature settings");
  }

  const DispersionModel model =
      p.filling_factor > 0.0 ? DispersionModel::pendry_eff(p) : DispersionModel::vacuum();
  const double limit = 1.0 - p.filling_factor;
  const double A = asymptote.value_or(limit);

  KKReport rep;
  rep.grid = grid;
  rep.asymptote_used = A;
  rep.omega = log_space(grid.min, grid.max, grid.count);

  const double y_lo = std::min(grid.min, p.resonance) * std::pow(10.0, -pv.decades_below);
  const double y_hi = std::max(grid.max, p.resonance) * std::pow(10.0, pv.decades_above);

  auto mu = [&](double y) { return eval_complex(model, y); };
  auto h_real = [&](double y) { return y * mu(y).imag(); };
  auto h_imag = [&](double y) { return mu(y).real() - A; };

  auto reconstruct = [&](int ppd) {
    const PrincipalValue pvint(pv, ppd, y_lo, y_hi);
    Reconstruction r;
    for (double w : rep.omega) {
      r.real.push_back(A + (2.0 / kPi) * pvint(h_real, w));
      r.imag.push_back(-(2.0 * w / kPi) * pvint(h_imag, w));
    }
    return r;
  };

  const Reconstruction fine = reconstruct(pv.panels_per_decade);
  const Reconstruction coarse = reconstruct(pv.panels_per_decade / 2);

  for (std::size_t i = 0; i < rep.omega.size(); ++i) {
    const double w = rep.omega[i];
    const std::complex<double> exact = mu(w);
    const double scale = std::abs(exact - limit);
    const double abs_re = std::abs(fine.real[i] - exact.real());
    const double abs_im = std::abs(fine.imag[i] - exact.imag());
    if (!std::isfinite(abs_re) || !std::isfinite(abs_im)) {
      throw NonConvergenceError("kk_check: principal-value integral is not finite", fine.real[i],
                                abs_re);
    }
    auto relative = [&](double x) { return x == 0.0 ? 0.0 : x / scale; };
    rep.residual_real.push_back(relative(abs_re));
    rep.residual_imag.push_back(relative(abs_im));
    rep.max_abs_residual_real = std::max(rep.max_abs_residual_real, abs_re);
    rep.max_abs_residual_imag = std::max(rep.max_abs_residual_imag, abs_im);
    rep.pv_error_estimate =
        std::max({rep.pv_error_estimate, relative(std::abs(fine.real[i] - coarse.real[i])),
                  relative(std::abs(fine.imag[i] - coarse.imag[i]))});
    if (std::abs(w - p.resonance) <= pv.window_fraction * w) ++rep.pole_window_warnings;
  }
  rep.max_residual_real = *std::max_element(rep.residual_real.begin(), rep.residual_real.end());
  rep.max_residual_imag = *std::max_element(rep.residual_imag.begin(), rep.residual_imag.end());

  if (!(rep.pv_error_estimate <= pv.max_error)) {
    throw NonConvergenceError("kk_check: principal-value quadrature not converged",
                              rep.max_residual_real, rep.pv_error_estimate);
  }
  return rep;
}

}  // namespace casimir::analysis
