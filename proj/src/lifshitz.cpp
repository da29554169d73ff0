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

#include "casimir/lifshitz.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <sstream>

#include "casimir/fresnel.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/units.hpp"
#include "parallel.hpp"

namespace casimir {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kC = units::kSpeedOfLight;

using quadrature::Vec;

struct Response {
  double eps;
  double mu;
};

Response respond(const HalfSpaceMaterial& m, double xi) {
  return {eval_imag(m.epsilon, xi), eval_imag(m.mu, xi)};
}

// Breakpoints lo, lo + 0.5, lo + 1, lo + 2, ... , hi.
std::vector<double> doubling_partition(double lo, double hi) {
  std::vector<double> pts{lo};
  for (double step = 0.5; lo + step < hi; step *= 2.0) pts.push_back(lo + step);
  pts.push_back(hi);
  return pts;
}

// Integral over u > m (and 0 < t < u) of u^2 * 2 e^{-u} / (1 - e^{-u}), which
// bounds the discarded region because |r1 r2| <= 1.
double tail_bound(double m) {
  const double poly = m * m * m + 3.0 * m * m + 6.0 * m + 6.0;
  return 2.0 * std::exp(-m) * poly / (1.0 - std::exp(-m));
}

struct InnerResult {
  Vec<3> value{};  // te, tm, error
  std::size_t evaluations = 0;
  std::size_t negative = 0;
  bool converged = true;
};

class Integrand {
 public:
  Integrand(const HalfSpaceMaterial& left, const HalfSpaceMaterial& right, double distance,
            const QuadratureSpec& spec, bool check_sign)
      : left_(left), right_(right), distance_(distance), spec_(spec), check_sign_(check_sign) {}

  // Integral over u in (t, u_cutoff) at fixed t = 2 xi d / c.
  InnerResult inner(double t) const {
    InnerResult out;
    if (!(t < spec_.u_cutoff)) return out;
    const double xi = kC * t / (2.0 * distance_);
    const Response a = respond(left_, xi);
    const Response b = respond(right_, xi);
    const double t2 = t * t;
    std::size_t negative = 0;
    auto batch = [&](std::span<const double> us, std::span<Vec<2>> fs) {
      for (std::size_t i = 0; i < us.size(); ++i) {
        const double u = us[i];
        // In units of 1/(2d): K3 -> u, k_par^2 -> u^2 - t^2, xi^2/c^2 -> t^2.
        const double k_sq = (u - t) * (u + t);
        const ReflectionPair r1 = reflection_from_response(a.eps, a.mu, k_sq, t2);
        const ReflectionPair r2 = reflection_from_response(b.eps, b.mu, k_sq, t2);
        const double decay = std::exp(-u);
        const double pte = r1.r_te * r2.r_te * decay;
        const double ptm = r1.r_tm * r2.r_tm * decay;
        assert(pte < 1.0 && ptm < 1.0);
        const double w = u * u;
        fs[i] = {w * pte / (1.0 - pte), w * ptm / (1.0 - ptm)};
        if (check_sign_ && (fs[i][0] < 0.0 || fs[i][1] < 0.0)) ++negative;
      }
    };
    const auto pts = doubling_partition(t, spec_.u_cutoff);
    const quadrature::Options opt{0.1 * spec_.rel_tol, 0.0, spec_.max_subdivisions};
    const auto r = quadrature::integrate_batched<2>(batch, pts, opt, Vec<2>{1.0, 1.0});
    out.value = {r.value[0], r.value[1], r.error_norm};
    out.evaluations = r.evaluations;
    out.negative = negative;
    out.converged = r.converged;
    return out;
  }

 private:
  const HalfSpaceMaterial& left_;
  const HalfSpaceMaterial& right_;
  double distance_;
  QuadratureSpec spec_;
  bool check_sign_;
};

}  // namespace

void validate(const QuadratureSpec& s) {
  auto fail = [](const char* what) { throw InvalidParameter(std::string("quadrature: ") + what); };
  if (!(s.rel_tol >= 0.0) || !(s.abs_tol >= 0.0)) fail("tolerances must be >= 0");
  if (!(s.rel_tol > 0.0 || s.abs_tol > 0.0)) fail("rel_tol or abs_tol must be > 0");
  if (s.max_subdivisions < 1) fail("max_subdivisions must be >= 1");
  if (!(s.xi_cutoff_factor >= kMinCutoff) || !std::isfinite(s.xi_cutoff_factor)) {
    fail("xi_cutoff_factor must be >= 30");
  }
  if (!(s.u_cutoff >= kMinCutoff) || !std::isfinite(s.u_cutoff)) fail("u_cutoff must be >= 30");
}

double ideal_mirror_pressure(double d) {
  return kPi * kPi * kC / (240.0 * d * d * d * d);
}

PressureResult pressure(const HalfSpaceMaterial& left, const HalfSpaceMaterial& right,
                        double distance, const QuadratureSpec& spec, const ExecutionOptions& exec) {
  if (!(distance > 0.0) || !std::isfinite(distance)) {
    throw DomainError("pressure: distance must be finite and > 0");
  }
  validate(spec);

  const Integrand integrand(left, right, distance, spec, exec.check_integrand_sign);
  std::size_t evaluations = 0;
  std::size_t negative = 0;
  bool inner_converged = true;

  auto batch = [&](std::span<const double> ts, std::span<Vec<3>> fs) {
    std::vector<InnerResult> inner(ts.size());
    detail::parallel_for(ts.size(), exec.threads,
                         [&](std::size_t i) { inner[i] = integrand.inner(ts[i]); });
    for (std::size_t i = 0; i < ts.size(); ++i) {
      fs[i] = inner[i].value;
      evaluations += inner[i].evaluations;
      negative += inner[i].negative;
      inner_converged = inner_converged && inner[i].converged;
    }
  };

  const double t_max = std::min(spec.xi_cutoff_factor, spec.u_cutoff);
  std::vector<double> pts{0.0};
  for (double t = 0.25; t < t_max; t *= 2.0) pts.push_back(t);
  pts.push_back(t_max);
  const quadrature::Options opt{spec.rel_tol, 0.0, spec.max_subdivisions};
  const auto outer = quadrature::integrate_batched<3>(batch, pts, opt, Vec<3>{1.0, 1.0, 0.0});

  // F/A = hbar c / (32 pi^2 d^4) * int dt int du u^2 sum_j rho_j e^{-u} / (1 - rho_j e^{-u}).
  const double d2 = distance * distance;
  const double prefactor = kC / (32.0 * kPi * kPi * d2 * d2);
  PressureResult res;
  res.te_part = prefactor * outer.value[0];
  res.tm_part = prefactor * outer.value[1];
  res.total = res.te_part + res.tm_part;
  res.error_estimate =
      prefactor * (outer.error_norm + std::abs(outer.value[2]) + tail_bound(t_max));
  res.node_count = evaluations;
  res.negative_samples = negative;

  const bool converged = outer.converged && inner_converged;
  const bool meets_abs = spec.abs_tol > 0.0 && res.error_estimate <= spec.abs_tol;
  if (!converged && !meets_abs) {
    std::ostringstream os;
    os << "pressure: quadrature did not converge at d = " << distance << " (estimate "
       << res.error_estimate << ")";
    throw PressureNonConvergence(os.str(), res);
  }
  return res;
}

std::vector<SweepPoint> pressure_sweep(const HalfSpaceMaterial& left,
                                       const HalfSpaceMaterial& right,
                                       std::span<const double> distances,
                                       const QuadratureSpec& spec, const ExecutionOptions& exec) {
  for (std::size_t i = 0; i < distances.size(); ++i) {
    if (!(distances[i] > 0.0) || !std::isfinite(distances[i])) {
      throw DomainError("pressure_sweep: distances must be finite and > 0");
    }
    if (i > 0 && !(distances[i] > distances[i - 1])) {
      throw DomainError("pressure_sweep: distances must be strictly increasing");
    }
  }
  validate(spec);
  std::vector<SweepPoint> out(distances.size());
  ExecutionOptions per_point = exec;
  per_point.threads = 1;
  detail::parallel_for(distances.size(), exec.threads, [&](std::size_t i) {
    SweepPoint& p = out[i];
    p.distance = distances[i];
    try {
      p.result = pressure(left, right, distances[i], spec, per_point);
    } catch (const PressureNonConvergence& e) {
      p.result = e.partial();
      p.converged = false;
      p.message = e.what();
    }
  });
  return out;
}

}  // namespace casimir
