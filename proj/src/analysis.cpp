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

#include "casimir/analysis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir::analysis {

std::vector<double> log_space(double lo, double hi, int n) {
  if (n < 1 || !(lo > 0.0) || !(hi >= lo)) {
    throw InvalidParameter("log_space: need n >= 1 and 0 < lo <= hi");
  }
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / (n - 1);
  for (int i = 0; i < n; ++i) out[i] = std::exp(a + step * i);
  out.front() = lo;
  out.back() = hi;
  return out;
}

const char* to_string(Verdict v) {
  return v == Verdict::NoRepulsionPossible ? "NoRepulsionPossible" : "RepulsionCandidate";
}

const char* to_string(Polarization p) { return p == Polarization::TE ? "TE" : "TM"; }

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::MainlyElectric: return "mainly_electric";
    case Dominance::MainlyMagnetic: return "mainly_magnetic";
    case Dominance::Mixed: return "mixed";
  }
  return "unknown";
}

bool sign_pattern_guaranteed(const HalfSpaceMaterial& m) {
  // mu <= 1 <= eps makes both rationalized numerators sign-definite:
  // (mu^2 - 1) k^2 + mu (mu - eps) q^2 <= 0 and (eps^2 - 1) k^2 + eps (eps - mu) q^2 >= 0.
  return imag_axis_bounds(m.mu).upper <= 1.0 && imag_axis_bounds(m.epsilon).lower >= 1.0;
}

namespace {

void check_axis(double lo, double hi, int n, const char* name) {
  if (n < kMinGridCount) {
    std::ostringstream os;
    os << "feasibility: " << name << " grid needs at least " << kMinGridCount << " points";
    throw InvalidParameter(os.str());
  }
  if (!(lo > 0.0) || !(lo <= 1e-3) || !(hi >= 1e3) || !std::isfinite(hi)) {
    std::ostringstream os;
    os << "feasibility: " << name << " grid must span at least [1e-3, 1e3]";
    throw InvalidParameter(os.str());
  }
}

}  // namespace

FeasibilityReport repulsion_feasibility(const HalfSpaceMaterial& left,
                                        const HalfSpaceMaterial& right, const LogGridSpec& grid,
                                        bool keep_samples) {
  check_axis(grid.xi_min, grid.xi_max, grid.xi_count, "xi");
  check_axis(grid.k_min, grid.k_max, grid.k_count, "k_par");
  const auto xis = log_space(grid.xi_min, grid.xi_max, grid.xi_count);
  const auto ks = log_space(grid.k_min, grid.k_max, grid.k_count);

  FeasibilityReport rep;
  rep.grid = grid;
  if (keep_samples) rep.samples.reserve(xis.size() * ks.size());
  for (double xi : xis) {
    for (double k : ks) {
      ReflectionPair a;
      ReflectionPair b;
      try {
        a = reflection(left, {xi, k});
        b = reflection(right, {xi, k});
      } catch (const Error& e) {
        std::ostringstream os;
        os << e.what() << " (at xi = " << xi << ", k_par = " << k << ")";
        throw DomainError(os.str());
      }
      const double te = a.r_te * b.r_te;
      const double tm = a.r_tm * b.r_tm;
      rep.samples_checked += 2;
      rep.min_product = std::min({rep.min_product, te, tm});
      if (!rep.witness) {
        if (te < 0.0) {
          rep.witness = Witness{xi, k, Polarization::TE, te};
        } else if (tm < 0.0) {
          rep.witness = Witness{xi, k, Polarization::TM, tm};
        }
      }
      if (keep_samples) rep.samples.push_back({xi, k, a, b});
    }
  }
  rep.verdict = rep.witness ? Verdict::RepulsionCandidate : Verdict::NoRepulsionPossible;
  rep.analytic = !rep.witness && sign_pattern_guaranteed(left) && sign_pattern_guaranteed(right);
  return rep;
}

RuleOfThumbReport rule_of_thumb(const HalfSpaceMaterial& m, std::span<const double> xi) {
  RuleOfThumbReport rep;
  rep.xi.assign(xi.begin(), xi.end());
  rep.classes.reserve(xi.size());
  std::size_t electric = 0;
  std::size_t magnetic = 0;
  std::size_t mixed = 0;
  for (double x : xi) {
    const double eps = eval_imag(m.epsilon, x);
    const double mu = eval_imag(m.mu, x);
    Dominance d = Dominance::Mixed;
    if (mu > eps) {
      d = Dominance::MainlyMagnetic;
      ++magnetic;
    } else if (mu < eps) {
      d = Dominance::MainlyElectric;
      ++electric;
    } else {
      ++mixed;
    }
    rep.classes.push_back(d);
  }
  if (!xi.empty()) {
    const double n = static_cast<double>(xi.size());
    rep.fraction_electric = electric / n;
    rep.fraction_magnetic = magnetic / n;
    rep.fraction_mixed = mixed / n;
  }
  return rep;
}

AnalyticityResult analyticity_check(const micromodel::CylinderArrayGeometry& geom) {
  if (!(geom.radius > 0.0) || !(geom.period > 0.0)) {
    throw InvalidParameter("analyticity_check: radius and period must be > 0");
  }
  return analyticity_check(PendryEffParams{micromodel::filling_factor(geom), 1.0, 0.0});
}

AnalyticityResult analyticity_check(const PendryEffParams& p) {
  const double f = p.filling_factor;
  return {f < 1.0, f, 1.0 - f};
}

}  // namespace casimir::analysis
