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

#include <cmath>
#include <random>
#include <vector>

#include "casimir/analysis.hpp"
#include "casimir/error.hpp"
#include "casimir/lifshitz.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace casimir;
using namespace casimir::analysis;

namespace {

LogGridSpec small_grid() { return {1e-3, 1e3, 40, 1e-3, 1e3, 40}; }

}  // namespace

TEST_CASE("log space") {
  const auto v = log_space(1e-3, 1e3, 7);
  REQUIRE(v.size() == 7);
  CHECK(v.front() == 1e-3);
  CHECK(v.back() == 1e3);
  CHECK(v[3] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(log_space(2.0, 5.0, 1) == std::vector<double>{2.0});
}

TEST_CASE("pendry metamaterials admit no repulsion") {
  for (double f : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const auto r = repulsion_feasibility(test::drude_metal(), test::pendry_metamaterial(f), {});
    CHECK(r.verdict == Verdict::NoRepulsionPossible);
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.analytic);
    CHECK(r.samples_checked == 2u * 100u * 100u);
    CHECK(r.min_product >= 0.0);
  }
}

TEST_CASE("strong lorentz magnetism yields a te witness") {
  const auto left = test::drude_metal();
  const auto right = test::lorentz_metamaterial(0.2);
  const auto r = repulsion_feasibility(left, right, {});
  CHECK(r.verdict == Verdict::RepulsionCandidate);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->polarization == Polarization::TE);
  CHECK_FALSE(r.analytic);
  const auto a = reflection(left, {r.witness->xi, r.witness->k_par});
  const auto b = reflection(right, {r.witness->xi, r.witness->k_par});
  CHECK(a.r_te * b.r_te < 0.0);
  CHECK(a.r_te * b.r_te == r.witness->product);
}

TEST_CASE("witness is the first one in scan order") {
  const auto left = test::drude_metal();
  const auto right = test::lorentz_metamaterial(0.2);
  const auto grid = small_grid();
  const auto r = repulsion_feasibility(left, right, grid);
  REQUIRE(r.witness.has_value());
  bool found = false;
  for (double xi : log_space(grid.xi_min, grid.xi_max, grid.xi_count)) {
    for (double k : log_space(grid.k_min, grid.k_max, grid.k_count)) {
      const auto a = reflection(left, {xi, k});
      const auto b = reflection(right, {xi, k});
      if (a.r_te * b.r_te < 0.0 || a.r_tm * b.r_tm < 0.0) {
        CHECK(xi == r.witness->xi);
        CHECK(k == r.witness->k_par);
        found = true;
        break;
      }
    }
    if (found) break;
  }
  CHECK(found);
}

TEST_CASE("vacuum pair has zero products everywhere") {
  const auto r = repulsion_feasibility(test::vacuum_material(), test::drude_metal(), small_grid(),
                                       true);
  CHECK(r.verdict == Verdict::NoRepulsionPossible);
  CHECK(r.min_product == 0.0);
  REQUIRE(r.samples.size() == 40u * 40u);
  for (const auto& s : r.samples) {
    CHECK(s.left.r_te == 0.0);
    CHECK(s.left.r_tm == 0.0);
  }
}

TEST_CASE("boyer configuration is a repulsion candidate") {
  const auto r = repulsion_feasibility(test::perfect_conductor(), test::perfect_magnet(), {});
  CHECK(r.verdict == Verdict::RepulsionCandidate);
  CHECK(r.witness.has_value());
}

TEST_CASE("grid requirements") {
  auto g = small_grid();
  g.xi_count = 31;
  CHECK_THROWS_AS(repulsion_feasibility(test::drude_metal(), test::drude_metal(), g),
                  InvalidParameter);
  g = small_grid();
  g.k_max = 10.0;
  CHECK_THROWS_AS(repulsion_feasibility(test::drude_metal(), test::drude_metal(), g),
                  InvalidParameter);
  g = small_grid();
  g.xi_min = 1e-5;
  g.xi_max = 1e5;
  CHECK_NOTHROW(repulsion_feasibility(test::drude_metal(), test::drude_metal(), g));
}

TEST_CASE("no-repulsion verdict is consistent with the pressure sign") {
  std::mt19937_64 rng(404);
  for (int draw = 0; draw < 6; ++draw) {
    const auto left = HalfSpaceMaterial{
        DispersionModel::drude({test::log_uniform(rng, 0.1, 3.0), test::log_uniform(rng, 1e-3, 0.1)}),
        DispersionModel::vacuum()};
    const auto right = HalfSpaceMaterial{
        DispersionModel::drude_lorentz({test::log_uniform(rng, 1e-2, 1.0), 0.1, 0.005}),
        DispersionModel::pendry_eff({test::uniform(rng, 0.05, 0.95), 0.1, 0.005})};
    const auto report = repulsion_feasibility(left, right, small_grid());
    REQUIRE(report.verdict == Verdict::NoRepulsionPossible);
    for (double d : {0.1, 0.5, 2.0, 8.0}) {
      const auto p = pressure(left, right, d, {}, {1, true});
      CHECK(p.total >= 0.0);
      CHECK(p.negative_samples == 0);
    }
  }
}

TEST_CASE("electric against magnetic material yields a te witness") {
  std::mt19937_64 rng(11);
  for (int draw = 0; draw < 20; ++draw) {
    const HalfSpaceMaterial electric{
        DispersionModel::drude({test::log_uniform(rng, 0.05, 5.0), 0.01}),
        DispersionModel::vacuum()};
    const HalfSpaceMaterial magnetic{
        DispersionModel::vacuum(),
        DispersionModel::drude_lorentz({test::log_uniform(rng, 0.05, 5.0),
                                        test::log_uniform(rng, 0.01, 1.0), 0.01})};
    const auto xi = log_space(1e-3, 1e3, 64);
    const auto e = rule_of_thumb(electric, xi);
    const auto m = rule_of_thumb(magnetic, xi);
    REQUIRE(e.fraction_electric == 1.0);
    REQUIRE(m.fraction_magnetic == 1.0);
    const auto r = repulsion_feasibility(electric, magnetic, small_grid());
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->polarization == Polarization::TE);
  }
}

TEST_CASE("rule of thumb classification") {
  const auto xi = log_space(1e-3, 1e3, 101);
  const auto pendry = rule_of_thumb(test::pendry_metamaterial(0.5), xi);
  CHECK(pendry.fraction_electric == 1.0);
  CHECK(pendry.classes.size() == xi.size());

  const HalfSpaceMaterial magnetic{DispersionModel::vacuum(),
                                   DispersionModel::drude_lorentz({0.1, 0.1, 0.005})};
  CHECK(rule_of_thumb(magnetic, xi).fraction_magnetic == 1.0);

  const HalfSpaceMaterial tie{DispersionModel::constant(2.0), DispersionModel::constant(2.0)};
  const auto t = rule_of_thumb(tie, xi);
  CHECK(t.fraction_mixed == 1.0);
  CHECK(t.classes[0] == Dominance::Mixed);
}

TEST_CASE("rule of thumb fractions match an independent scan") {
  const auto xi = log_space(1e-3, 1e3, 200);
  struct Oscillator {
    double strength, resonance, damping;
  };
  const Oscillator magnets[] = {{0.02, 0.1, 0.005}, {0.1, 0.1, 0.005}, {0.06, 0.5, 0.01}};
  bool flipped = false;
  for (const auto& o : magnets) {
    const HalfSpaceMaterial m{test::metamaterial_epsilon(),
                              DispersionModel::drude_lorentz({o.strength, o.resonance, o.damping})};
    const auto r = rule_of_thumb(m, xi);
    int mag = 0, ele = 0;
    for (double x : xi) {
      const double eps = 1.0 + 0.04 * 0.04 / (0.1 * 0.1 + x * x + 0.005 * x);
      const double mu =
          1.0 + o.strength * o.strength / (o.resonance * o.resonance + x * x + o.damping * x);
      if (mu > eps) ++mag;
      else if (mu < eps) ++ele;
    }
    CHECK(r.fraction_magnetic == doctest::Approx(mag / 200.0));
    CHECK(r.fraction_electric == doctest::Approx(ele / 200.0));
    if (mag > 0 && ele > 0) flipped = true;
  }
  CHECK(flipped);
}

TEST_CASE("analyticity condition") {
  micromodel::CylinderArrayGeometry g{0.3, 0.003, 1.0, 30.0, 0.0, 1.0};
  const auto a = analyticity_check(g);
  CHECK(a.pass);
  CHECK(a.filling_factor == doctest::Approx(3.14159265358979323846 * 0.09).epsilon(1e-14));
  CHECK(a.margin == doctest::Approx(1.0 - 3.14159265358979323846 * 0.09).epsilon(1e-14));

  const auto edge = analyticity_check(PendryEffParams{0.999, 1.0, 0.1});
  CHECK(edge.pass);
  CHECK(edge.margin == doctest::Approx(0.001).epsilon(1e-12));

  const auto bad = analyticity_check(PendryEffParams{1.2, 1.0, 0.1});
  CHECK_FALSE(bad.pass);
  CHECK(bad.margin < 0.0);
}

TEST_CASE("kramers-kronig reconstruction of the default model") {
  const PendryEffParams p{0.5, 0.1, 0.005};
  const auto r = kk_check(p, {});
  CHECK(r.omega.size() == 200);
  CHECK(r.asymptote_used == 0.5);
  CHECK(r.max_residual_real < 1e-3);
  CHECK(r.max_residual_imag < 1e-3);
  CHECK(r.max_residual_real >= 0.0);
  CHECK(r.pole_window_warnings > 0);
  for (std::size_t i = 0; i < r.omega.size(); ++i) {
    CHECK(r.residual_real[i] >= 0.0);
    CHECK(r.residual_imag[i] >= 0.0);
  }
}

TEST_CASE("kramers-kronig residual shrinks under refinement") {
  const PendryEffParams p{0.5, 0.1, 0.005};
  PVQuadratureSpec pv;
  pv.max_error = INFINITY;
  double prev_re = INFINITY, prev_im = INFINITY;
  std::vector<double> nodes, residuals;
  for (int ppd : {4, 8, 16, 32, 64}) {
    pv.panels_per_decade = ppd;
    const auto r = kk_check(p, {}, pv);
    CHECK(r.max_residual_real < prev_re);
    CHECK(r.max_residual_imag < prev_im);
    prev_re = r.max_residual_real;
    prev_im = r.max_residual_imag;
    nodes.push_back(ppd);
    residuals.push_back(r.max_residual_real);
  }
  // Observed order in node count over the ladder.
  const double order = -std::log(residuals.back() / residuals.front()) /
                       std::log(nodes.back() / nodes.front());
  CHECK(order >= 1.0);
}

TEST_CASE("kramers-kronig trivial and error cases") {
  const auto zero = kk_check(PendryEffParams{0.0, 0.1, 0.005}, {});
  CHECK(zero.max_residual_real == 0.0);
  CHECK(zero.max_residual_imag == 0.0);
  CHECK(zero.asymptote_used == 1.0);

  const auto shifted = kk_check(PendryEffParams{0.5, 0.1, 0.005}, {}, {}, 1.0);
  CHECK(shifted.asymptote_used == 1.0);
  CHECK(shifted.max_abs_residual_real == doctest::Approx(0.5).epsilon(1e-3));

  CHECK_THROWS_AS(kk_check(PendryEffParams{0.5, 0.1, 0.0}, {}), PoleError);
  CHECK_THROWS_AS(kk_check(PendryEffParams{1.0, 0.1, 0.005}, {}), InvalidParameter);
  PVQuadratureSpec coarse;
  coarse.panels_per_decade = 4;
  CHECK_THROWS_AS(kk_check(PendryEffParams{0.5, 0.1, 0.005}, {}, coarse), NonConvergenceError);
  CHECK(std::string(kKKRelationNote).find("1-f") != std::string::npos);
}
