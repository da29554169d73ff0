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

#include "handles.hpp"

namespace casimir::cli {

void check(casimir_status status) {
  if (status != CASIMIR_OK) throw ApiError(status, casimir_last_error());
}

ModelHandle make_model(const ModelSpec& spec, const std::string& key) {
  casimir_model* raw = nullptr;
  const auto p = [&](const char* name) { return spec.params.at(name); };
  casimir_status status = CASIMIR_OK;
  if (spec.kind == "vacuum") {
    status = casimir_model_vacuum(&raw);
  } else if (spec.kind == "constant") {
    status = casimir_model_constant(p("value"), &raw);
  } else if (spec.kind == "drude") {
    status = casimir_model_drude(p("plasma"), p("gamma"), &raw);
  } else if (spec.kind == "drude_lorentz") {
    status = casimir_model_drude_lorentz(p("strength"), p("resonance"), p("gamma"), &raw);
  } else if (spec.kind == "pendry") {
    status = casimir_model_pendry(p("f"), p("resonance"), p("gamma"), &raw);
  } else {
    throw ConfigError(key, "unknown model '" + spec.kind + "'");
  }
  if (status != CASIMIR_OK) throw ConfigError(key, casimir_last_error());
  return ModelHandle(raw);
}

MaterialHandle make_material(const MaterialSpec& spec, const std::string& key) {
  const auto eps = make_model(spec.epsilon, key + ".epsilon");
  const auto mu = make_model(spec.mu, key + ".mu");
  casimir_material* raw = nullptr;
  if (casimir_material_new(eps.get(), mu.get(), &raw) != CASIMIR_OK) {
    throw ConfigError(key, casimir_last_error());
  }
  return MaterialHandle(raw);
}

}  // namespace casimir::cli
