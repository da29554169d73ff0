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

#include "casimir/casimir.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "casimir/analysis.hpp"
#include "casimir/dispersion.hpp"
#include "casimir/error.hpp"
#include "casimir/fresnel.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/micromodel.hpp"
#include "casimir/units.hpp"

#ifndef CASIMIR_VERSION_STRING
#define CASIMIR_VERSION_STRING "0.0.0"
#endif

struct casimir_model {
  casimir::DispersionModel model;
};

struct casimir_material {
  casimir::HalfSpaceMaterial material;
};

namespace {

thread_local std::string last_error;

casimir_status fail(casimir_status status, const char* message) {
  last_error = message;
  return status;
}

// Maps the library's exception hierarchy onto status codes.
template <class F>
casimir_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return CASIMIR_OK;
  } catch (const casimir::NonConvergenceError& e) {
    return fail(CASIMIR_ERROR_NO_CONVERGENCE, e.what());
  } catch (const casimir::PoleError& e) {
    return fail(CASIMIR_ERROR_POLE, e.what());
  } catch (const casimir::DomainError& e) {
    return fail(CASIMIR_ERROR_DOMAIN, e.what());
  } catch (const casimir::InvalidParameter& e) {
    return fail(CASIMIR_ERROR_INVALID_PARAMETER, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CASIMIR_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CASIMIR_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(CASIMIR_ERROR_INTERNAL, "unknown error");
  }
}

template <class... Ts>
bool any_null(const Ts*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

casimir_status null_argument() {
  return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "null pointer argument");
}

casimir_status make_model(casimir::DispersionModel (*factory)(), casimir_model** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { *out = new casimir_model{factory()}; });
}

template <class Build>
casimir_status build_model(casimir_model** out, Build&& build) {
  if (out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new casimir_model{build()}; });
}

casimir::QuadratureSpec to_cpp(const casimir_quadrature_spec* s) {
  casimir::QuadratureSpec q;
  if (s != nullptr) {
    q.rel_tol = s->rel_tol;
    q.abs_tol = s->abs_tol;
    q.max_subdivisions = s->max_subdivisions;
    q.xi_cutoff_factor = s->xi_cutoff_factor;
    q.u_cutoff = s->u_cutoff;
  }
  return q;
}

casimir_pressure_result to_c(const casimir::PressureResult& r) {
  return {r.total, r.te_part, r.tm_part, r.error_estimate,
          static_cast<unsigned long long>(r.node_count),
          static_cast<unsigned long long>(r.negative_samples)};
}

casimir::micromodel::CylinderArrayGeometry to_cpp(const casimir_geometry& g) {
  return {g.radius, g.sheet_gap, g.period, g.length, g.sheet_resistivity, g.capacitance_per_length};
}

casimir::analysis::LogGridSpec to_cpp(const casimir_grid& g) {
  return {g.xi_min, g.xi_max, g.xi_count, g.k_min, g.k_max, g.k_count};
}

}  // namespace

extern "C" {

const char* casimir_version(void) { return CASIMIR_VERSION_STRING; }

const char* casimir_status_string(casimir_status status) {
  switch (status) {
    case CASIMIR_OK: return "ok";
    case CASIMIR_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case CASIMIR_ERROR_INVALID_PARAMETER: return "invalid parameter";
    case CASIMIR_ERROR_DOMAIN: return "domain error";
    case CASIMIR_ERROR_POLE: return "pole error";
    case CASIMIR_ERROR_NO_CONVERGENCE: return "no convergence";
    case CASIMIR_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* casimir_last_error(void) { return last_error.c_str(); }

double casimir_lambda_metres(double scale_frequency) {
  return casimir::units::lambda_metres(scale_frequency);
}

double casimir_pressure_unit_pa(double scale_frequency) {
  return casimir::units::pressure_unit_pa(scale_frequency);
}

double casimir_speed_of_light_internal(void) { return casimir::units::kSpeedOfLight; }

casimir_status casimir_model_vacuum(casimir_model** out) {
  return make_model(&casimir::DispersionModel::vacuum, out);
}

casimir_status casimir_model_constant(double value, casimir_model** out) {
  return build_model(out, [&] { return casimir::DispersionModel::constant(value); });
}

casimir_status casimir_model_drude(double plasma_frequency, double dissipation,
                                   casimir_model** out) {
  return build_model(out, [&] {
    return casimir::DispersionModel::drude({plasma_frequency, dissipation});
  });
}

casimir_status casimir_model_drude_lorentz(double oscillator_strength, double resonance,
                                           double dissipation, casimir_model** out) {
  return build_model(out, [&] {
    return casimir::DispersionModel::drude_lorentz({oscillator_strength, resonance, dissipation});
  });
}

casimir_status casimir_model_pendry(double filling_factor, double resonance, double dissipation,
                                    casimir_model** out) {
  return build_model(out, [&] {
    return casimir::DispersionModel::pendry_eff({filling_factor, resonance, dissipation});
  });
}

void casimir_model_free(casimir_model* model) { delete model; }

casimir_status casimir_model_kind_of(const casimir_model* model, casimir_model_kind* out) {
  if (any_null(model, out)) return null_argument();
  *out = static_cast<casimir_model_kind>(model->model.kind());
  last_error.clear();
  return CASIMIR_OK;
}

casimir_status casimir_model_eval_imag(const casimir_model* model, double xi, double* out) {
  if (any_null(model, out)) return null_argument();
  return guarded([&] { *out = casimir::eval_imag(model->model, xi); });
}

casimir_status casimir_model_eval_real(const casimir_model* model, double omega, double* re,
                                       double* im) {
  if (any_null(model, re, im)) return null_argument();
  return guarded([&] {
    const auto v = casimir::eval_real(model->model, omega);
    *re = v.real();
    *im = v.imag();
  });
}

casimir_status casimir_material_new(const casimir_model* epsilon, const casimir_model* mu,
                                    casimir_material** out) {
  if (any_null(epsilon, mu, out)) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new casimir_material{{epsilon->model, mu->model}}; });
}

void casimir_material_free(casimir_material* material) { delete material; }

casimir_status casimir_material_sign_pattern_guaranteed(const casimir_material* material,
                                                        int* out) {
  if (any_null(material, out)) return null_argument();
  return guarded(
      [&] { *out = casimir::analysis::sign_pattern_guaranteed(material->material) ? 1 : 0; });
}

casimir_status casimir_k3(double xi, double k_par, double* out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    if (!(xi > 0.0) || !(k_par >= 0.0)) throw casimir::DomainError("k3: need xi > 0, k_par >= 0");
    *out = casimir::k3({xi, k_par});
  });
}

casimir_status casimir_reflection(const casimir_material* material, double xi, double k_par,
                                  double* r_te, double* r_tm) {
  if (any_null(material, r_te, r_tm)) return null_argument();
  return guarded([&] {
    const auto r = casimir::reflection(material->material, {xi, k_par});
    *r_te = r.r_te;
    *r_tm = r.r_tm;
  });
}

void casimir_quadrature_spec_default(casimir_quadrature_spec* spec) {
  if (spec == nullptr) return;
  const casimir::QuadratureSpec q;
  *spec = {q.rel_tol, q.abs_tol, q.max_subdivisions, q.xi_cutoff_factor, q.u_cutoff};
}

casimir_status casimir_pressure(const casimir_material* left, const casimir_material* right,
                                double distance, const casimir_quadrature_spec* spec, int threads,
                                int check_integrand_sign, casimir_pressure_result* out) {
  if (any_null(left, right, out)) return null_argument();
  const casimir::ExecutionOptions exec{threads < 1 ? 1 : threads, check_integrand_sign != 0};
  try {
    last_error.clear();
    *out = to_c(casimir::pressure(left->material, right->material, distance, to_cpp(spec), exec));
    return CASIMIR_OK;
  } catch (const casimir::PressureNonConvergence& e) {
    *out = to_c(e.partial());
    return fail(CASIMIR_ERROR_NO_CONVERGENCE, e.what());
  } catch (...) {
    return guarded([] { throw; });
  }
}

casimir_status casimir_pressure_sweep(const casimir_material* left, const casimir_material* right,
                                      const double* distances, size_t count,
                                      const casimir_quadrature_spec* spec, int threads,
                                      casimir_pressure_result* results, int* converged) {
  if (any_null(left, right) || (count > 0 && any_null(distances, results, converged))) {
    return null_argument();
  }
  return guarded([&] {
    const casimir::ExecutionOptions exec{threads < 1 ? 1 : threads, false};
    const auto points = casimir::pressure_sweep(
        left->material, right->material, std::span<const double>(distances, count), to_cpp(spec),
        exec);
    for (size_t i = 0; i < count; ++i) {
      results[i] = to_c(points[i].result);
      converged[i] = points[i].converged ? 1 : 0;
    }
  });
}

double casimir_ideal_mirror_pressure(double distance) {
  return casimir::ideal_mirror_pressure(distance);
}

casimir_status casimir_geometry_from_si(const casimir_geometry* si, casimir_geometry* cgs) {
  if (any_null(si, cgs)) return null_argument();
  namespace u = casimir::units;
  // F/m -> statF/cm: divide by (statF in F) * (100 cm/m).
  *cgs = {si->radius * 100.0,
          si->sheet_gap * 100.0,
          si->period * 100.0,
          si->length * 100.0,
          si->sheet_resistivity / u::kStatohm,
          si->capacitance_per_length / (u::kStatfarad * 100.0)};
  last_error.clear();
  return CASIMIR_OK;
}

casimir_status casimir_geometry_validate(const casimir_geometry* geometry) {
  if (geometry == nullptr) return null_argument();
  return guarded([&] { casimir::micromodel::validate(to_cpp(*geometry)); });
}

casimir_status casimir_geometry_diagnostics(const casimir_geometry* geometry,
                                            double* gap_over_radius, double* radius_over_length,
                                            int* warnings) {
  if (any_null(geometry, gap_over_radius, radius_over_length, warnings)) return null_argument();
  return guarded([&] {
    const auto g = to_cpp(*geometry);
    casimir::micromodel::validate(g);
    const auto d = casimir::micromodel::diagnostics(g);
    *gap_over_radius = d.gap_over_radius;
    *radius_over_length = d.radius_over_length;
    const double t = casimir::micromodel::kSoftValidityThreshold;
    *warnings = (d.gap_over_radius > t ? CASIMIR_WARN_GAP_OVER_RADIUS : 0) |
                (d.radius_over_length > t ? CASIMIR_WARN_RADIUS_OVER_LENGTH : 0);
  });
}

casimir_status casimir_geometry_to_params(const casimir_geometry* geometry,
                                          casimir_pendry_params* out) {
  if (any_null(geometry, out)) return null_argument();
  return guarded([&] {
    const auto p = casimir::micromodel::geometry_to_params(to_cpp(*geometry));
    *out = {p.filling_factor, p.resonance, p.dissipation};
  });
}

casimir_status casimir_induced_current(const casimir_geometry* geometry, double h_re, double h_im,
                                       double omega, double* j_re, double* j_im) {
  if (any_null(geometry, j_re, j_im)) return null_argument();
  return guarded([&] {
    const auto g = to_cpp(*geometry);
    casimir::micromodel::validate(g);
    const auto j = casimir::micromodel::induced_current(g, {h_re, h_im}, omega);
    *j_re = j.real();
    *j_im = j.imag();
  });
}

casimir_status casimir_effective_mu(const casimir_geometry* geometry, double omega, double* re,
                                    double* im) {
  if (any_null(geometry, re, im)) return null_argument();
  return guarded([&] {
    const auto g = to_cpp(*geometry);
    casimir::micromodel::validate(g);
    const auto mu = casimir::micromodel::effective_mu_from_fields(g, omega);
    *re = mu.real();
    *im = mu.imag();
  });
}

void casimir_grid_default(casimir_grid* grid) {
  if (grid == nullptr) return;
  const casimir::analysis::LogGridSpec g;
  *grid = {g.xi_min, g.xi_max, g.xi_count, g.k_min, g.k_max, g.k_count};
}

casimir_status casimir_feasibility(const casimir_material* left, const casimir_material* right,
                                   const casimir_grid* grid, casimir_feasibility_report* out,
                                   casimir_scan_sample* samples, size_t capacity) {
  if (any_null(left, right, grid, out)) return null_argument();
  if (samples != nullptr && grid->xi_count > 0 && grid->k_count > 0 &&
      capacity < static_cast<size_t>(grid->xi_count) * static_cast<size_t>(grid->k_count)) {
    return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "feasibility: sample buffer too small");
  }
  return guarded([&] {
    const auto rep = casimir::analysis::repulsion_feasibility(left->material, right->material,
                                                              to_cpp(*grid), samples != nullptr);
    casimir_feasibility_report r{};
    r.verdict = rep.verdict == casimir::analysis::Verdict::NoRepulsionPossible
                    ? CASIMIR_NO_REPULSION_POSSIBLE
                    : CASIMIR_REPULSION_CANDIDATE;
    r.analytic = rep.analytic ? 1 : 0;
    r.has_witness = rep.witness ? 1 : 0;
    if (rep.witness) {
      r.witness_xi = rep.witness->xi;
      r.witness_k_par = rep.witness->k_par;
      r.witness_polarization =
          rep.witness->polarization == casimir::analysis::Polarization::TE ? CASIMIR_TE : CASIMIR_TM;
      r.witness_product = rep.witness->product;
    }
    r.samples_checked = rep.samples_checked;
    r.min_product = rep.min_product;
    *out = r;
    if (samples != nullptr) {
      for (size_t i = 0; i < rep.samples.size(); ++i) {
        const auto& s = rep.samples[i];
        samples[i] = {s.xi, s.k_par, s.left.r_te, s.left.r_tm, s.right.r_te, s.right.r_tm};
      }
    }
  });
}

casimir_status casimir_rule_of_thumb(const casimir_material* material, const double* xi,
                                     size_t count, casimir_dominance* classes,
                                     double fractions[3]) {
  if (any_null(material, fractions) || (count > 0 && xi == nullptr)) return null_argument();
  return guarded([&] {
    const auto rep =
        casimir::analysis::rule_of_thumb(material->material, std::span<const double>(xi, count));
    if (classes != nullptr) {
      for (size_t i = 0; i < count; ++i) {
        classes[i] = static_cast<casimir_dominance>(rep.classes[i]);
      }
    }
    fractions[0] = rep.fraction_electric;
    fractions[1] = rep.fraction_magnetic;
    fractions[2] = rep.fraction_mixed;
  });
}

casimir_status casimir_analyticity_check_geometry(const casimir_geometry* geometry,
                                                  casimir_analyticity* out) {
  if (any_null(geometry, out)) return null_argument();
  return guarded([&] {
    const auto r = casimir::analysis::analyticity_check(to_cpp(*geometry));
    *out = {r.pass ? 1 : 0, r.filling_factor, r.margin};
  });
}

casimir_status casimir_analyticity_check_params(const casimir_pendry_params* params,
                                                casimir_analyticity* out) {
  if (any_null(params, out)) return null_argument();
  return guarded([&] {
    const auto r = casimir::analysis::analyticity_check(
        casimir::PendryEffParams{params->filling_factor, params->resonance, params->dissipation});
    *out = {r.pass ? 1 : 0, r.filling_factor, r.margin};
  });
}

void casimir_kk_spec_default(casimir_kk_spec* spec) {
  if (spec == nullptr) return;
  const casimir::analysis::OmegaGrid g;
  const casimir::analysis::PVQuadratureSpec pv;
  *spec = {g.min,           g.max,          g.count,        pv.panels_per_decade,
           pv.gauss_order,  pv.window_fraction, pv.decades_below, pv.decades_above,
           pv.max_error,    0,              0.0};
}

const char* casimir_kk_relation_note(void) { return casimir::analysis::kKKRelationNote; }

casimir_status casimir_kk_check(const casimir_pendry_params* params, const casimir_kk_spec* spec,
                                casimir_kk_report* out, double* residual_real,
                                double* residual_imag) {
  if (any_null(params, spec, out)) return null_argument();
  return guarded([&] {
    const casimir::analysis::OmegaGrid grid{spec->omega_min, spec->omega_max, spec->count};
    const casimir::analysis::PVQuadratureSpec pv{spec->panels_per_decade, spec->gauss_order,
                                                 spec->window_fraction,   spec->decades_below,
                                                 spec->decades_above,     spec->max_error};
    std::optional<double> asymptote;
    if (spec->override_asymptote != 0) asymptote = spec->asymptote;
    const auto rep = casimir::analysis::kk_check(
        {params->filling_factor, params->resonance, params->dissipation}, grid, pv, asymptote);
    *out = {rep.max_residual_real, rep.max_residual_imag, rep.max_abs_residual_real,
            rep.max_abs_residual_imag, rep.asymptote_used, rep.pv_error_estimate,
            static_cast<unsigned long long>(rep.pole_window_warnings)};
    for (size_t i = 0; i < rep.omega.size(); ++i) {
      if (residual_real != nullptr) residual_real[i] = rep.residual_real[i];
      if (residual_imag != nullptr) residual_imag[i] = rep.residual_imag[i];
    }
  });
}

}  // extern "C"
