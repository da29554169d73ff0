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

#include "casimir/fresnel.hpp"

#include <cmath>

#include "casimir/error.hpp"
#include "casimir/units.hpp"

namespace casimir {

namespace {

void check_point(const ImagFreqPoint& p) {
  if (!(p.k_par >= 0.0) || !std::isfinite(p.k_par)) {
    throw DomainError("reflection: k_par must be finite and >= 0");
  }
}

double q_squared(double xi) {
  const double q = xi / units::kSpeedOfLight;
  return q * q;
}

struct Kernel {
  double k3;
  double k_med;
  ReflectionNumerators num;
};

// mu K - K_med = (mu^2 K^2 - K_med^2) / (mu K + K_med) with
// mu^2 K^2 - K_med^2 = (mu^2 - 1) k^2 + mu (mu - eps) q^2, and likewise for TM.
Kernel kernel(double eps, double mu, double k_sq, double q_sq) {
  const double k3 = std::sqrt(k_sq + q_sq);
  const double k_med = std::sqrt(k_sq + mu * eps * q_sq);
  const double te = ((mu - 1.0) * (mu + 1.0) * k_sq + mu * (mu - eps) * q_sq) / (mu * k3 + k_med);
  const double tm = ((eps - 1.0) * (eps + 1.0) * k_sq + eps * (eps - mu) * q_sq) / (eps * k3 + k_med);
  return {k3, k_med, {te, tm}};
}

}  // namespace

double k3(const ImagFreqPoint& p) { return std::sqrt(p.k_par * p.k_par + q_squared(p.xi)); }

ReflectionNumerators numerators_from_response(double eps, double mu, double k_sq, double q_sq) {
  return kernel(eps, mu, k_sq, q_sq).num;
}

ReflectionPair reflection_from_response(double eps, double mu, double k_sq, double q_sq) {
  const Kernel k = kernel(eps, mu, k_sq, q_sq);
  return {k.num.te / (mu * k.k3 + k.k_med), k.num.tm / (eps * k.k3 + k.k_med)};
}

ReflectionPair reflection(const HalfSpaceMaterial& m, const ImagFreqPoint& p) {
  check_point(p);
  const double eps = eval_imag(m.epsilon, p.xi);
  const double mu = eval_imag(m.mu, p.xi);
  return reflection_from_response(eps, mu, p.k_par * p.k_par, q_squared(p.xi));
}

ReflectionNumerators reflection_numerators(const HalfSpaceMaterial& m, const ImagFreqPoint& p) {
  check_point(p);
  const double eps = eval_imag(m.epsilon, p.xi);
  const double mu = eval_imag(m.mu, p.xi);
  return numerators_from_response(eps, mu, p.k_par * p.k_par, q_squared(p.xi));
}

}  // namespace casimir
