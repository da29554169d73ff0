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
#include "doctest.h"
#include "test_support.hpp"

using namespace casimir;
using casimir::test::rel_diff;

TEST_CASE("eval_imag reproduces the closed forms") {
  // Reference values from tests/oracles/compute_oracles.py (50-digit mpmath).
  const auto pendry = DispersionModel::pendry_eff({0.5, 0.1, 0.005});
  CHECK(rel_diff(eval_imag(pendry, 0.1), 0.76190476190476190476) < 1e-15);

  const auto drude = DispersionModel::drude({0.96, 0.004});
  CHECK(rel_diff(eval_imag(drude, 0.96), 1.9958506224066390041) < 1e-15);

  CHECK(eval_imag(DispersionModel::vacuum(), 3.0) == 1.0);
  CHECK(eval_imag(DispersionModel::constant(7.5), 3.0) == 7.5);
}

TEST_CASE("pendry limits on the imaginary axis") {
  const auto m = DispersionModel::pendry_eff({0.5, 1.0, 0.0});
  CHECK(eval_imag(m, 1e-9) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eval_imag(m, 1e9) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("eval_real at real frequency") {
  const auto dl = DispersionModel::drude_lorentz({0.04, 0.1, 0.005});
  const auto v = eval_real(dl, 0.05);
  CHECK(rel_diff(v.real(), 1.2130965593784683685) < 1e-14);
  CHECK(rel_diff(v.imag(), 0.007103218645948945616) < 1e-13);
  CHECK(v.imag() > 0.0);

  CHECK(eval_real(DispersionModel::vacuum(), 12.0) == std::complex<double>(1.0, 0.0));

  const auto p = DispersionModel::pendry_eff({0.3, 1.0, 0.0});
  CHECK(eval_real(p, 1e8).real() == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("domain and pole errors") {
  const auto d = DispersionModel::drude({1.0, 0.1});
  CHECK_THROWS_AS(eval_imag(d, 0.0), DomainError);
  CHECK_THROWS_AS(eval_imag(d, -1.0), DomainError);
  CHECK_THROWS_AS(eval_real(d, 0.0), DomainError);

  const auto undamped = DispersionModel::drude_lorentz({0.5, 2.0, 0.0});
  CHECK_THROWS_AS(eval_real(undamped, 2.0), PoleError);
  CHECK_NOTHROW(eval_real(undamped, 2.5));
  CHECK_THROWS_AS(eval_real(DispersionModel::pendry_eff({0.5, 2.0, 0.0}), 2.0), PoleError);
}

TEST_CASE("parameter invariants are enforced at construction") {
  CHECK_THROWS_AS(DispersionModel::drude({0.0, 0.1}), InvalidParameter);
  CHECK_THROWS_AS(DispersionModel::drude({1.0, -0.1}), InvalidParameter);
  CHECK_THROWS_AS(DispersionModel::drude_lorentz({0.1, 0.0, 0.1}), InvalidParameter);
  CHECK_THROWS_AS(DispersionModel::drude_lorentz({-0.1, 1.0, 0.1}), InvalidParameter);
  CHECK_THROWS_AS(DispersionModel::pendry_eff({0.0, 1.0, 0.1}), InvalidParameter);
  CHECK_THROWS_AS(DispersionModel::pendry_eff({1.0, 1.0, 0.1}), InvalidParameter);
  CHECK_THROWS_AS(DispersionModel::pendry_eff({1.5, 1.0, 0.1}), InvalidParameter);
  CHECK_THROWS_AS(DispersionModel::constant(-1.0), InvalidParameter);
  CHECK_NOTHROW(DispersionModel::constant(0.0));
}

TEST_CASE("positivity and monotonicity over a wide log grid") {
  std::mt19937_64 rng(20260101);
  const auto grid = analysis::log_space(1e-6, 1e6, 400);
  for (int draw = 0; draw < 50; ++draw) {
    const double s = test::log_uniform(rng, 1e-3, 10.0);
    const double w0 = test::log_uniform(rng, 1e-3, 10.0);
    const double g = test::uniform(rng, 0.0, 1.0) * w0;
    const double f = test::uniform(rng, 0.01, 0.99);
    const auto drude = DispersionModel::drude({s, g});
    const auto lorentz = DispersionModel::drude_lorentz({s, w0, g});
    const auto pendry = DispersionModel::pendry_eff({f, w0, g});
    const auto pendry0 = DispersionModel::pendry_eff({f, w0, 0.0});

    double prev_d = INFINITY, prev_l = INFINITY, prev_p0 = INFINITY;
    for (double xi : grid) {
      const double vd = eval_imag(drude, xi);
      const double vl = eval_imag(lorentz, xi);
      const double vp = eval_imag(pendry, xi);
      const double vp0 = eval_imag(pendry0, xi);
      REQUIRE(vd >= 1.0);
      REQUIRE(vl >= 1.0);
      REQUIRE(vd <= prev_d);
      REQUIRE(vl <= prev_l);
      REQUIRE(vp > 1.0 - f);
      REQUIRE(vp < 1.0);  // diamagnetic everywhere on the imaginary axis
      REQUIRE(vp0 <= prev_p0 * (1.0 + 1e-15));
      prev_d = vd;
      prev_l = vl;
      prev_p0 = vp0;
    }
  }
}

TEST_CASE("lorentz permeability is paramagnetic, pendry diamagnetic") {
  const auto lorentz = DispersionModel::drude_lorentz({0.2, 0.1, 0.005});
  const auto pendry = DispersionModel::pendry_eff({0.4, 0.1, 0.005});
  for (double xi : analysis::log_space(1e-4, 1e4, 81)) {
    CHECK(eval_imag(lorentz, xi) > 1.0);
    CHECK(eval_imag(pendry, xi) < 1.0);
  }
}

TEST_CASE("imaginary-axis values agree with the continued complex form") {
  const DispersionModel models[] = {
      DispersionModel::drude({0.96, 0.004}), DispersionModel::drude_lorentz({0.04, 0.1, 0.005}),
      DispersionModel::pendry_eff({0.5, 0.1, 0.005}), DispersionModel::constant(3.0)};
  for (const auto& m : models) {
    for (double xi : analysis::log_space(1e-4, 1e3, 30)) {
      const auto z = eval_complex(m, {0.0, xi});
      CHECK(std::abs(z.imag()) <= 1e-14 * std::abs(z.real()));
      CHECK(rel_diff(z.real(), eval_imag(m, xi)) < 1e-14);
    }
  }
}

TEST_CASE("imag axis bounds") {
  CHECK(imag_axis_bounds(DispersionModel::pendry_eff({0.3, 1.0, 0.1})).lower == doctest::Approx(0.7));
  CHECK(imag_axis_bounds(DispersionModel::pendry_eff({0.3, 1.0, 0.1})).upper == 1.0);
  CHECK(imag_axis_bounds(DispersionModel::drude_lorentz({0.2, 0.1, 0.0})).upper ==
        doctest::Approx(5.0));
  CHECK(std::isinf(imag_axis_bounds(DispersionModel::drude({1.0, 0.1})).upper));
}

TEST_CASE("model identity and description") {
  CHECK(DispersionModel() == DispersionModel::vacuum());
  CHECK(DispersionModel::drude({1.0, 0.1}) == DispersionModel::drude({1.0, 0.1}));
  CHECK_FALSE(DispersionModel::drude({1.0, 0.1}) == DispersionModel::drude({1.0, 0.2}));
  CHECK_FALSE(DispersionModel::constant(1.0) == DispersionModel::vacuum());
  CHECK(DispersionModel::pendry_eff({0.5, 0.1, 0.005}).kind() == ModelKind::PendryEff);
  CHECK(DispersionModel::pendry_eff({0.5, 0.1, 0.005}).describe().find("pendry") == 0);
}
