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

#include <iostream>

#include "CLI11.hpp"
#include "casimir/casimir.h"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace casimir::cli;
  CLI::App app{"Casimir pressure between dispersive half-spaces"};
  app.set_version_flag("--version", std::string(casimir_version()));
  app.require_subcommand(1);

  GlobalOptions opts;
  double rel_tol = 0.0;
  app.add_option("--config", opts.config_path, "Run configuration (INI)")->check(CLI::ExistingFile);
  app.add_option("--output", opts.output, "Output path (overrides [output] path)");
  auto* rel = app.add_option("--rel-tol", rel_tol, "Relative quadrature tolerance");
  app.add_option("--threads", opts.threads, "Worker threads; results do not depend on it")
      ->check(CLI::PositiveNumber);
  app.add_flag("--si", opts.si, "Append SI columns");

  double distance = 0.0;
  auto* pressure = app.add_subcommand("pressure", "Pressure at one distance, as one CSV row");
  pressure->add_option("--distance", distance, "Gap width in units of Lambda")->required();
  auto* sweep = app.add_subcommand("sweep", "Pressure over the [distances] grid");
  auto* feasibility =
      app.add_subcommand("feasibility", "Scan reflection-coefficient signs for repulsion");
  auto* kk = app.add_subcommand("kk-check", "Kramers-Kronig consistency of the permeability");

  GeometryOptions geom;
  auto* homogenize =
      app.add_subcommand("homogenize", "Effective permeability parameters of a cylinder array");
  homogenize->add_option("--radius", geom.radius, "Cylinder radius")->required();
  homogenize->add_option("--gap", geom.gap, "Gap between the sheets")->required();
  homogenize->add_option("--period", geom.period, "Lattice period")->required();
  homogenize->add_option("--length", geom.length, "Cylinder length")->required();
  homogenize->add_option("--alpha", geom.alpha, "Sheet resistivity (ohm or s/cm)")->required();
  homogenize->add_option("--capacitance", geom.capacitance,
                         "Capacitance per unit length (F/m or Gaussian)")
      ->required();
  homogenize->add_option("--units", geom.units, "si (m, ohm, F/m) or cgs")
      ->check(CLI::IsMember({"si", "cgs"}));

  for (auto* sub : {pressure, sweep, feasibility, kk, homogenize}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  if (rel->count() > 0) opts.rel_tol = rel_tol;

  if (*pressure) return cmd_pressure(opts, distance, std::cout, std::cerr);
  if (*sweep) return cmd_sweep(opts, std::cout, std::cerr);
  if (*feasibility) return cmd_feasibility(opts, std::cout, std::cerr);
  if (*kk) return cmd_kk_check(opts, std::cout, std::cerr);
  return cmd_homogenize(opts, geom, std::cout, std::cerr);
}
