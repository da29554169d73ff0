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

#include <complex>
#include <string>
#include <variant>

namespace casimir {

/// Drude metal: eps(w) = 1 - plasma^2 / (w^2 + i gamma w).
struct DrudeParams {
  double plasma_frequency = 0.0;
  double dissipation = 0.0;
};

/// Single Lorentz oscillator: 1 - strength^2 / (w^2 - resonance^2 + i gamma w).
/// Used for the permittivity and, in the magnetic role, for the permeability.
struct DrudeLorentzParams {
  double oscillator_strength = 0.0;
  double resonance = 0.0;
  double dissipation = 0.0;
};

/// Split-cylinder effective permeability:
/// mu(w) = 1 - f w^2 / (w^2 - resonance^2 + 2 i gamma w).
/// The factor 2 on the damping term is part of the model.
struct PendryEffParams {
  double filling_factor = 0.0;
  double resonance = 0.0;
  double dissipation = 0.0;
};

struct Vacuum {};

struct Constant {
  double value = 1.0;
};

void validate(const DrudeParams& p);
void validate(const DrudeLorentzParams& p);
void validate(const PendryEffParams& p);
void validate(const Constant& p);

enum class ModelKind { Vacuum, Constant, Drude, DrudeLorentz, PendryEff };

const char* to_string(ModelKind kind);

/// A validated material response model. Instances can only be obtained from
/// the named constructors, which enforce the parameter invariants, so every
/// model is real and non-negative on the positive imaginary axis.
class DispersionModel {
 public:
  using Variant = std::variant<Vacuum, Constant, DrudeParams, DrudeLorentzParams, PendryEffParams>;

  DispersionModel() = default;  // vacuum

  static DispersionModel vacuum();
  static DispersionModel constant(double value);
  static DispersionModel drude(const DrudeParams& p);
  static DispersionModel drude_lorentz(const DrudeLorentzParams& p);
  static DispersionModel pendry_eff(const PendryEffParams& p);

  ModelKind kind() const noexcept;
  const Variant& variant() const noexcept { return model_; }

  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&model_);
  }

  std::string describe() const;

  friend bool operator==(const DispersionModel& a, const DispersionModel& b);

 private:
  explicit DispersionModel(Variant v) : model_(std::move(v)) {}
  Variant model_{Vacuum{}};
};

/// Permittivity and permeability of one half-space.
struct HalfSpaceMaterial {
  DispersionModel epsilon;
  DispersionModel mu;
};

/// Value at w = i xi, obtained by w^2 -> -xi^2 and i gamma w -> -gamma xi.
/// Throws DomainError unless xi > 0.
double eval_imag(const DispersionModel& model, double xi);

/// Complex value at real w > 0 (e^{-i w t} convention, Im > 0 is absorption).
/// Throws DomainError unless w > 0 and PoleError on an undamped resonance.
std::complex<double> eval_real(const DispersionModel& model, double omega);

/// Value at an arbitrary complex frequency; no domain checks. Used by the
/// continuation cross-checks and the Kramers-Kronig machinery.
std::complex<double> eval_complex(const DispersionModel& model, std::complex<double> omega);

/// Tight bounds of the model over the whole positive imaginary axis.
struct ImagAxisBounds {
  double lower;
  double upper;
};

ImagAxisBounds imag_axis_bounds(const DispersionModel& model);

}  // namespace casimir
