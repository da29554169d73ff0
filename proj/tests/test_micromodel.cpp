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

#include <complex>
#include <random>

#include "casimir/analysis.hpp"
#include "casimir/dispersion.hpp"
#include "casimir/error.hpp"
#include "casimir/micromodel.hpp"
#include "casimir/units.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace casimir;
using namespace casimir::units;
using namespace casimir::micromodel;
using casimir::test::rel_diff;
using cplx = std::complex<double>;

namespace {

CylinderArrayGeometry reference_geometry() {
  return {1e-3, 1e-5, 5e-3, 1.0, 1e-12, 2.0};
}

CylinderArrayGeometry random_geometry(std::mt19937_64& rng) {
  CylinderArrayGeometry g;
  g.radius = test::log_uniform(rng, 1e-4, 1e-1);
  g.period = g.radius * test::uniform(rng, 2.0001, 40.0);
  g.sheet_gap = g.radius * test::log_uniform(rng, 1e-3, 0.5);
  g.length = g.radius * test::log_uniform(rng, 2.0, 1e3);
  g.sheet_resistivity = test::log_uniform(rng, 1e-16, 1e-10);
  g.capacitance_per_length = test::log_uniform(rng, 1e-2, 1e2);
  return g;
}

// 1 - f w^2 / (w^2 - w_m^2 + 2 i gamma w), written out from the geometry.
cplx closed_form(const CylinderArrayGeometry& g, cplx w) {
  const double c = kSpeedOfLightCGS;
  const double pi = 3.14159265358979323846;
  const double f = pi * g.radius * g.radius / (g.period * g.period);
  const double wm2 = c * c / (pi * g.radius * g.radius * g.capacitance_per_length);
  const double gm = g.sheet_resistivity * c * c / g.radius;
  return 1.0 - f * w * w / (w * w - wm2 + 2.0 * cplx(0.0, 1.0) * gm * w);
}

}  // namespace

TEST_CASE("induced current matches an independent evaluation") {
  const auto g = reference_geometry();
  const cplx j = induced_current(g, 1.0, 1e13);
  CHECK(rel_diff(j.real(), 48811724580.079390881) < 1e-12);
  CHECK(rel_diff(j.imag(), 15778314980.458824336) < 1e-12);
  CHECK(induced_current(g, 0.0, 1e13) == cplx(0.0, 0.0));
  CHECK_THROWS_AS(induced_current(g, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(induced_current(g, 1.0, -1.0), DomainError);
}

TEST_CASE("large resistance suppresses the current") {
  auto g = reference_geometry();
  double prev = INFINITY;
  for (double alpha : {1e-12, 1e-8, 1e-4, 1.0, 1e4}) {
    g.sheet_resistivity = alpha;
    const double mag = std::abs(induced_current(g, 1.0, 1e13));
    CHECK(mag < prev);
    prev = mag;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("geometry to parameters") {
  const auto p = geometry_to_params(reference_geometry());
  CHECK(rel_diff(p.filling_factor, 0.12566370614359172954) < 1e-15);
  CHECK(rel_diff(p.resonance, 11959988684167.072924) < 1e-14);
  CHECK(rel_diff(p.dissipation, 898755178736.81764) < 1e-14);

  auto half = reference_geometry();
  half.radius = half.period / std::sqrt(2.0 * 3.14159265358979323846);
  CHECK(geometry_to_params(half).filling_factor == doctest::Approx(0.5).epsilon(1e-15));

  auto doubled = reference_geometry();
  doubled.capacitance_per_length *= 2.0;
  CHECK(geometry_to_params(doubled).resonance / p.resonance ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("effective permeability reference value") {
  const cplx mu = effective_mu_from_fields(reference_geometry(), 1e13);
  CHECK(rel_diff(mu.real(), 1.2486018963955598585) < 1e-12);
  CHECK(rel_diff(mu.imag(), 0.10382218455201198355) < 1e-12);
}

TEST_CASE("geometry validation") {
  auto g = reference_geometry();
  CHECK_NOTHROW(validate(g));
  g.radius = 0.6 * g.period;
  CHECK_THROWS_AS(validate(g), InvalidParameter);
  g.radius = 0.5 * g.period;
  CHECK_THROWS_AS(validate(g), InvalidParameter);
  g = reference_geometry();
  g.capacitance_per_length = 0.0;
  CHECK_THROWS_AS(validate(g), InvalidParameter);
  g = reference_geometry();
  g.sheet_resistivity = -1.0;
  CHECK_THROWS_AS(validate(g), InvalidParameter);
  g = reference_geometry();
  g.sheet_gap = 0.0;
  CHECK_THROWS_AS(validate(g), InvalidParameter);
  CHECK_THROWS_AS(geometry_to_params(CylinderArrayGeometry{1.0, 0.1, 1.5, 10.0, 0.0, 1.0}),
                  InvalidParameter);
}

TEST_CASE("soft validity diagnostics") {
  auto g = reference_geometry();
  CHECK(diagnostics(g).warnings.empty());
  g.sheet_gap = 0.5 * g.radius;
  g.length = 2.0 * g.radius;
  const auto d = diagnostics(g);
  CHECK(d.gap_over_radius == doctest::Approx(0.5));
  CHECK(d.radius_over_length == doctest::Approx(0.5));
  CHECK(d.warnings.size() == 2);
}

TEST_CASE("total fields") {
  const auto g = reference_geometry();
  const double f = filling_factor(g);
  const auto s = total_fields(g, 2.0, 0.0);
  CHECK(s.h_inside == cplx(2.0, 0.0));
  CHECK(s.h_outside == cplx(2.0, 0.0));

  const cplx j(3e10, -4e10);
  const auto t = total_fields(g, 1.0, j);
  CHECK(std::abs(t.h_outside - (1.0 - f * j / kSpeedOfLightCGS)) < 1e-15);

  auto thin = g;
  thin.radius = 1e-9;
  CHECK(std::abs(total_fields(thin, 1.0, j).h_outside - 1.0) < 1e-12);
}

TEST_CASE("field chain identities over random geometries") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 500; ++i) {
    const auto g = random_geometry(rng);
    const double w = geometry_to_params(g).resonance * test::log_uniform(rng, 1e-3, 1e3);
    const cplx h(test::uniform(rng, -2.0, 2.0), test::uniform(rng, -2.0, 2.0));
    const cplx j = induced_current(g, h, w);
    const auto s = total_fields(g, h, j);
    const cplx diff = s.h_inside - s.h_outside;
    const double scale = std::abs(h) + std::abs(j / kSpeedOfLightCGS);
    REQUIRE(std::abs(diff - j / kSpeedOfLightCGS) <= 4e-16 * scale);
    REQUIRE(s.applied == h);
    REQUIRE(s.current_per_length == j);
  }
}

TEST_CASE("field chain equals the closed form") {
  std::mt19937_64 rng(1234);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto g = random_geometry(rng);
    const double wm = geometry_to_params(g).resonance;
    for (double x : analysis::log_space(1e-3, 1e3, 20)) {
      const double w = wm * x;
      const cplx chain = effective_mu_from_fields(g, w);
      const cplx ref = closed_form(g, w);
      worst = std::max(worst, std::abs(chain - ref) / std::abs(ref));
      const cplx lib = eval_real(DispersionModel::pendry_eff(geometry_to_params(g)), w);
      worst = std::max(worst, std::abs(chain - lib) / std::abs(lib));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("static and high-frequency limits") {
  const auto g = reference_geometry();
  const double f = filling_factor(g);
  CHECK(std::abs(effective_mu_from_fields(g, 1e3) - 1.0) < 1e-12);
  CHECK(std::abs(effective_mu_from_fields(g, 1e25) - (1.0 - f)) < 1e-12);
}

TEST_CASE("continuation to the imaginary axis stays in (1 - f, 1)") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_geometry(rng);
    const auto p = geometry_to_params(g);
    const auto model = DispersionModel::pendry_eff(p);
    for (double x : analysis::log_space(1e-3, 1e3, 25)) {
      const double xi = p.resonance * x;
      const cplx mu = effective_mu_complex(g, cplx(0.0, xi));
      REQUIRE(std::abs(mu.imag()) <= 1e-12 * mu.real());
      REQUIRE(mu.real() > 1.0 - p.filling_factor);
      REQUIRE(mu.real() < 1.0);
      REQUIRE(rel_diff(mu.real(), eval_imag(model, xi)) < 1e-12);
    }
  }
}

TEST_CASE("geometry parameters satisfy the model invariants") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const auto p = geometry_to_params(random_geometry(rng));
    REQUIRE(p.filling_factor > 0.0);
    REQUIRE(p.filling_factor < 3.14159265358979323846 / 4.0);
    REQUIRE_NOTHROW(validate(p));
  }
}

TEST_CASE("undamped resonance is a pole") {
  auto g = reference_geometry();
  g.sheet_resistivity = 0.0;
  const double wm = geometry_to_params(g).resonance;
  bool pole = false;
  try {
    pole = std::abs(effective_mu_complex(g, cplx(wm, 0.0))) > 1e8;
  } catch (const PoleError&) {
    pole = true;
  }
  CHECK(pole);
  // Zero of mu where w^2 (1 - f) = w_m^2.
  const double w_zero = wm / std::sqrt(1.0 - filling_factor(g));
  CHECK(std::abs(effective_mu_complex(g, cplx(w_zero, 0.0))) < 1e-8);
}
