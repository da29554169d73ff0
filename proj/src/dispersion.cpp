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

#include "casimir/dispersion.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

void validate(const DrudeParams& p) {
  require(finite(p.plasma_frequency) && p.plasma_frequency > 0.0,
          "drude: plasma frequency must be > 0");
  require(finite(p.dissipation) && p.dissipation >= 0.0, "drude: dissipation must be >= 0");
}

void validate(const DrudeLorentzParams& p) {
  require(finite(p.oscillator_strength) && p.oscillator_strength >= 0.0,
          "drude-lorentz: oscillator strength must be >= 0");
  require(finite(p.resonance) && p.resonance > 0.0, "drude-lorentz: resonance must be > 0");
  require(finite(p.dissipation) && p.dissipation >= 0.0,
          "drude-lorentz: dissipation must be >= 0");
}

void validate(const PendryEffParams& p) {
  require(finite(p.filling_factor) && p.filling_factor > 0.0 && p.filling_factor < 1.0,
          "pendry: filling factor must satisfy 0 < f < 1");
  require(finite(p.resonance) && p.resonance > 0.0, "pendry: resonance must be > 0");
  require(finite(p.dissipation) && p.dissipation >= 0.0, "pendry: dissipation must be >= 0");
}

void validate(const Constant& p) {
  require(finite(p.value) && p.value >= 0.0, "constant: value must be finite and >= 0");
}

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Vacuum: return "vacuum";
    case ModelKind::Constant: return "constant";
    case ModelKind::Drude: return "drude";
    case ModelKind::DrudeLorentz: return "drude_lorentz";
    case ModelKind::PendryEff: return "pendry";
  }
  return "unknown";
}

DispersionModel DispersionModel::vacuum() { return DispersionModel(Vacuum{}); }

DispersionModel DispersionModel::constant(double value) {
  Constant c{value};
  validate(c);
  return DispersionModel(c);
}

DispersionModel DispersionModel::drude(const DrudeParams& p) {
  validate(p);
  return DispersionModel(p);
}

DispersionModel DispersionModel::drude_lorentz(const DrudeLorentzParams& p) {
  validate(p);
  return DispersionModel(p);
}

DispersionModel DispersionModel::pendry_eff(const PendryEffParams& p) {
  validate(p);
  return DispersionModel(p);
}

ModelKind DispersionModel::kind() const noexcept {
  return static_cast<ModelKind>(model_.index());
}

std::string DispersionModel::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(Overloaded{
                 [&](const Vacuum&) { os << "vacuum"; },
                 [&](const Constant& c) { os << "constant(" << c.value << ")"; },
                 [&](const DrudeParams& p) {
                   os << "drude(plasma=" << p.plasma_frequency << ", gamma=" << p.dissipation << ")";
                 },
                 [&](const DrudeLorentzParams& p) {
                   os << "drude_lorentz(strength=" << p.oscillator_strength
                      << ", resonance=" << p.resonance << ", gamma=" << p.dissipation << ")";
                 },
                 [&](const PendryEffParams& p) {
                   os << "pendry(f=" << p.filling_factor << ", resonance=" << p.resonance
                      << ", gamma=" << p.dissipation << ")";
                 },
             },
             model_);
  return os.str();
}

bool operator==(const DispersionModel& a, const DispersionModel& b) {
  if (a.model_.index() != b.model_.index()) return false;
  return std::visit(
      Overloaded{
          [](const Vacuum&, const Vacuum&) { return true; },
          [](const Constant& x, const Constant& y) { return x.value == y.value; },
          [](const DrudeParams& x, const DrudeParams& y) {
            return x.plasma_frequency == y.plasma_frequency && x.dissipation == y.dissipation;
          },
          [](const DrudeLorentzParams& x, const DrudeLorentzParams& y) {
            return x.oscillator_strength == y.oscillator_strength && x.resonance == y.resonance &&
                   x.dissipation == y.dissipation;
          },
          [](const PendryEffParams& x, const PendryEffParams& y) {
            return x.filling_factor == y.filling_factor && x.resonance == y.resonance &&
                   x.dissipation == y.dissipation;
          },
          [](const auto&, const auto&) { return false; },
      },
      a.model_, b.model_);
}

double eval_imag(const DispersionModel& model, double xi) {
  if (!(xi > 0.0) || !std::isfinite(xi)) {
    throw DomainError("eval_imag: xi must be finite and > 0");
  }
  const double xi2 = xi * xi;
  return std::visit(
      Overloaded{
          [](const Vacuum&) { return 1.0; },
          [](const Constant& c) { return c.value; },
          [&](const DrudeParams& p) {
            const double w = p.plasma_frequency;
            return 1.0 + w * w / (xi2 + p.dissipation * xi);
          },
          [&](const DrudeLorentzParams& p) {
            const double s = p.oscillator_strength;
            return 1.0 + s * s / (xi2 + p.resonance * p.resonance + p.dissipation * xi);
          },
          [&](const PendryEffParams& p) {
            return 1.0 - p.filling_factor * xi2 /
                             (xi2 + p.resonance * p.resonance + 2.0 * p.dissipation * xi);
          },
      },
      model.variant());
}

std::complex<double> eval_complex(const DispersionModel& model, std::complex<double> w) {
  using cd = std::complex<double>;
  constexpr cd i{0.0, 1.0};
  const cd w2 = w * w;
  return std::visit(
      Overloaded{
          [](const Vacuum&) { return cd{1.0}; },
          [](const Constant& c) { return cd{c.value}; },
          [&](const DrudeParams& p) {
            const double s = p.plasma_frequency;
            return 1.0 - s * s / (w2 + i * p.dissipation * w);
          },
          [&](const DrudeLorentzParams& p) {
            const double s = p.oscillator_strength;
            return 1.0 - s * s / (w2 - p.resonance * p.resonance + i * p.dissipation * w);
          },
          [&](const PendryEffParams& p) {
            return 1.0 - p.filling_factor * w2 /
                             (w2 - p.resonance * p.resonance + 2.0 * i * p.dissipation * w);
          },
      },
      model.variant());
}

std::complex<double> eval_real(const DispersionModel& model, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("eval_real: omega must be finite and > 0");
  }
  auto on_pole = [&](double resonance, double gamma) {
    return gamma == 0.0 && omega * omega == resonance * resonance;
  };
  if (const auto* p = model.get_if<DrudeLorentzParams>()) {
    if (p->oscillator_strength > 0.0 && on_pole(p->resonance, p->dissipation)) {
      throw PoleError("eval_real: undamped drude-lorentz evaluated on its resonance");
    }
  } else if (const auto* q = model.get_if<PendryEffParams>()) {
    if (on_pole(q->resonance, q->dissipation)) {
      throw PoleError("eval_real: undamped pendry model evaluated on its resonance");
    }
  }
  return eval_complex(model, omega);
}

ImagAxisBounds imag_axis_bounds(const DispersionModel& model) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return std::visit(
      Overloaded{
          [](const Vacuum&) { return ImagAxisBounds{1.0, 1.0}; },
          [](const Constant& c) { return ImagAxisBounds{c.value, c.value}; },
          [&](const DrudeParams&) { return ImagAxisBounds{1.0, inf}; },
          [&](const DrudeLorentzParams& p) {
            const double r = p.oscillator_strength / p.resonance;
            return ImagAxisBounds{1.0, 1.0 + r * r};
          },
          [&](const PendryEffParams& p) { return ImagAxisBounds{1.0 - p.filling_factor, 1.0}; },
      },
      model.variant());
}

}  // namespace casimir
