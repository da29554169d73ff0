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

#include <memory>
#include <stdexcept>
#include <string>

#include "casimir/casimir.h"
#include "config.hpp"

namespace casimir::cli {

struct ModelDeleter {
  void operator()(casimir_model* m) const { casimir_model_free(m); }
};
struct MaterialDeleter {
  void operator()(casimir_material* m) const { casimir_material_free(m); }
};

using ModelHandle = std::unique_ptr<casimir_model, ModelDeleter>;
using MaterialHandle = std::unique_ptr<casimir_material, MaterialDeleter>;

/// A failed library call: status plus the library's message.
class ApiError : public std::runtime_error {
 public:
  ApiError(casimir_status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  casimir_status status() const noexcept { return status_; }

 private:
  casimir_status status_;
};

void check(casimir_status status);

/// Builds the model; library rejections are reported as ConfigError on key.
ModelHandle make_model(const ModelSpec& spec, const std::string& key);
MaterialHandle make_material(const MaterialSpec& spec, const std::string& key);

}  // namespace casimir::cli
