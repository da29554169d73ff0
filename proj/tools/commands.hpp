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

#include <optional>
#include <ostream>
#include <string>

#include "config.hpp"

namespace casimir::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

struct GlobalOptions {
  std::string config_path;  // empty: built-in defaults
  std::string output;       // overrides [output] path
  std::optional<double> rel_tol;
  int threads = 1;
  bool si = false;
};

struct GeometryOptions {
  double radius = 0.0;
  double gap = 0.0;
  double period = 0.0;
  double length = 0.0;
  double alpha = 0.0;
  double capacitance = 0.0;
  std::string units = "si";  // si: m, ohm, F/m; cgs: cm, s/cm, dimensionless
};

/// Resolves the config file plus command-line overrides. Throws ConfigError.
RunConfig resolve_config(const GlobalOptions& opts);

int cmd_pressure(const GlobalOptions& opts, double distance, std::ostream& out, std::ostream& err);
int cmd_sweep(const GlobalOptions& opts, std::ostream& out, std::ostream& err);
int cmd_feasibility(const GlobalOptions& opts, std::ostream& out, std::ostream& err);
int cmd_kk_check(const GlobalOptions& opts, std::ostream& out, std::ostream& err);
int cmd_homogenize(const GlobalOptions& opts, const GeometryOptions& geom, std::ostream& out,
                   std::ostream& err);

/// Writes text to path through a temporary file and a rename.
void write_atomically(const std::string& path, const std::string& text);

}  // namespace casimir::cli
