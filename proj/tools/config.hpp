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

#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace casimir::cli {

/// Load-time failure; key is the dotted config path ("material_right.mu.f").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Model tag plus its named parameters, stored in internal units.
struct ModelSpec {
  std::string kind = "vacuum";
  std::map<std::string, double> params;

  bool operator==(const ModelSpec&) const = default;
};

struct MaterialSpec {
  ModelSpec epsilon;
  ModelSpec mu;

  bool operator==(const MaterialSpec&) const = default;
};

struct DistanceSpec {
  double min = 0.1;
  double max = 10.0;
  int count = 40;
  std::string spacing = "log";

  bool operator==(const DistanceSpec&) const = default;
};

struct QuadratureSettings {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;
  int max_subdivisions = 200;
  double xi_cutoff_factor = 60.0;
  double u_cutoff = 60.0;

  bool operator==(const QuadratureSettings&) const = default;
};

struct GridSettings {
  double xi_min = 1e-3;
  double xi_max = 1e3;
  int xi_count = 100;
  double k_min = 1e-3;
  double k_max = 1e3;
  int k_count = 100;

  bool operator==(const GridSettings&) const = default;
};

struct KKSettings {
  // Falls back to material_right.mu when unset.
  std::optional<double> f;
  std::optional<double> resonance;
  std::optional<double> gamma;
  double omega_min = 1e-3;
  double omega_max = 10.0;
  int count = 200;
  int panels_per_decade = 32;
  double threshold = 1e-3;

  bool operator==(const KKSettings&) const = default;
};

struct RunConfig {
  double scale_frequency = 1.43e16;  // rad/s
  MaterialSpec left;
  MaterialSpec right;
  DistanceSpec distances;
  QuadratureSettings quadrature;
  GridSettings feasibility;
  KKSettings kk;
  std::string output_path;
  bool si_columns = false;  // append d_m to pressure CSV rows

  bool operator==(const RunConfig&) const = default;
};

/// Drude metal against a Drude-Lorentz / split-cylinder metamaterial (f = 0.5).
RunConfig default_config();

RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

/// Canonical text form; parse_config(serialize(c)) == c. Without
/// include_path the output path is left out (manifests, digests).
std::string serialize(const RunConfig& config, bool include_path = true);

/// SHA-256 (hex) of the canonical form without the output path.
std::string config_digest(const RunConfig& config);

std::vector<double> distance_grid(const DistanceSpec& spec);

/// Parameter names accepted by a model kind, in canonical order.
const std::vector<std::string>& model_parameters(const std::string& kind);

}  // namespace casimir::cli
