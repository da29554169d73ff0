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

/*
 * C interface of the casimir library.
 *
 * Every fallible function returns a casimir_status; on failure a description
 * is available from casimir_last_error() on the calling thread until the next
 * call into the library. Handles are opaque, owned by the caller and released
 * with the matching *_free function (which accepts NULL). All functions are
 * safe to call concurrently on distinct or shared const handles.
 *
 * Units: frequencies in multiples of a scale frequency Omega, lengths in
 * Lambda = 2 pi c / Omega, pressures in hbar Omega / Lambda^3 (positive means
 * attraction). The micro-model functions use Gaussian units (cm, s).
 */

#ifndef CASIMIR_CASIMIR_H
#define CASIMIR_CASIMIR_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CASIMIR_BUILDING_LIBRARY)
#    define CASIMIR_API __declspec(dllexport)
#  else
#    define CASIMIR_API __declspec(dllimport)
#  endif
#else
#  define CASIMIR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum casimir_status {
  CASIMIR_OK = 0,
  CASIMIR_ERROR_INVALID_ARGUMENT = 1,  /* null pointer or unusable option */
  CASIMIR_ERROR_INVALID_PARAMETER = 2, /* model, geometry or spec invariant violated */
  CASIMIR_ERROR_DOMAIN = 3,            /* argument outside the operation's domain */
  CASIMIR_ERROR_POLE = 4,              /* undamped real-axis resonance */
  CASIMIR_ERROR_NO_CONVERGENCE = 5,    /* numerical budget exhausted */
  CASIMIR_ERROR_INTERNAL = 6
} casimir_status;

CASIMIR_API const char* casimir_version(void);
CASIMIR_API const char* casimir_status_string(casimir_status status);
CASIMIR_API const char* casimir_last_error(void);

/* ---- units ------------------------------------------------------------ */

CASIMIR_API double casimir_lambda_metres(double scale_frequency);
CASIMIR_API double casimir_pressure_unit_pa(double scale_frequency);
CASIMIR_API double casimir_speed_of_light_internal(void);

/* ---- dispersion models ------------------------------------------------ */

typedef struct casimir_model casimir_model;

typedef enum casimir_model_kind {
  CASIMIR_MODEL_VACUUM = 0,
  CASIMIR_MODEL_CONSTANT = 1,
  CASIMIR_MODEL_DRUDE = 2,
  CASIMIR_MODEL_DRUDE_LORENTZ = 3,
  CASIMIR_MODEL_PENDRY = 4
} casimir_model_kind;

CASIMIR_API casimir_status casimir_model_vacuum(casimir_model** out);
CASIMIR_API casimir_status casimir_model_constant(double value, casimir_model** out);
CASIMIR_API casimir_status casimir_model_drude(double plasma_frequency, double dissipation,
                                               casimir_model** out);
CASIMIR_API casimir_status casimir_model_drude_lorentz(double oscillator_strength, double resonance,
                                                       double dissipation, casimir_model** out);
/* mu(w) = 1 - f w^2 / (w^2 - resonance^2 + 2 i dissipation w) */
CASIMIR_API casimir_status casimir_model_pendry(double filling_factor, double resonance,
                                                double dissipation, casimir_model** out);
CASIMIR_API void casimir_model_free(casimir_model* model);

CASIMIR_API casimir_status casimir_model_kind_of(const casimir_model* model,
                                                 casimir_model_kind* out);
/* Value at w = i xi (xi > 0). */
CASIMIR_API casimir_status casimir_model_eval_imag(const casimir_model* model, double xi,
                                                   double* out);
/* Complex value at real w > 0. */
CASIMIR_API casimir_status casimir_model_eval_real(const casimir_model* model, double omega,
                                                   double* re, double* im);

/* ---- half-space materials --------------------------------------------- */

typedef struct casimir_material casimir_material;

/* Copies both models; the model handles may be freed afterwards. */
CASIMIR_API casimir_status casimir_material_new(const casimir_model* epsilon,
                                                const casimir_model* mu, casimir_material** out);
CASIMIR_API void casimir_material_free(casimir_material* material);

/* *out = 1 when the model bounds force mu(i xi) <= 1 <= eps(i xi) for all xi. */
CASIMIR_API casimir_status casimir_material_sign_pattern_guaranteed(
    const casimir_material* material, int* out);

/* ---- reflection at imaginary frequency -------------------------------- */

CASIMIR_API casimir_status casimir_k3(double xi, double k_par, double* out);
CASIMIR_API casimir_status casimir_reflection(const casimir_material* material, double xi,
                                              double k_par, double* r_te, double* r_tm);

/* ---- Lifshitz pressure ------------------------------------------------ */

typedef struct casimir_quadrature_spec {
  double rel_tol;
  double abs_tol;
  int max_subdivisions;
  double xi_cutoff_factor;
  double u_cutoff;
} casimir_quadrature_spec;

typedef struct casimir_pressure_result {
  double total;
  double te_part;
  double tm_part;
  double error_estimate;
  unsigned long long node_count;
  unsigned long long negative_samples;
} casimir_pressure_result;

CASIMIR_API void casimir_quadrature_spec_default(casimir_quadrature_spec* spec);

/* spec may be NULL for defaults. threads < 1 is treated as 1. When
 * check_integrand_sign is non-zero, negative polarization terms are counted in
 * negative_samples. On CASIMIR_ERROR_NO_CONVERGENCE *out holds the partial
 * result. */
CASIMIR_API casimir_status casimir_pressure(const casimir_material* left,
                                            const casimir_material* right, double distance,
                                            const casimir_quadrature_spec* spec, int threads,
                                            int check_integrand_sign,
                                            casimir_pressure_result* out);

/* Fills results[i] and converged[i] for each distance (strictly increasing).
 * Non-converged points are flagged, not reported as an error. */
CASIMIR_API casimir_status casimir_pressure_sweep(const casimir_material* left,
                                                  const casimir_material* right,
                                                  const double* distances, size_t count,
                                                  const casimir_quadrature_spec* spec, int threads,
                                                  casimir_pressure_result* results,
                                                  int* converged);

CASIMIR_API double casimir_ideal_mirror_pressure(double distance);

/* ---- split-cylinder micro-model (Gaussian units) ---------------------- */

typedef struct casimir_geometry {
  double radius;
  double sheet_gap;
  double period;
  double length;
  double sheet_resistivity;      /* s/cm (SI: ohm) */
  double capacitance_per_length; /* dimensionless (SI: F/m) */
} casimir_geometry;

typedef struct casimir_pendry_params {
  double filling_factor;
  double resonance;
  double dissipation;
} casimir_pendry_params;

enum {
  CASIMIR_WARN_GAP_OVER_RADIUS = 1,
  CASIMIR_WARN_RADIUS_OVER_LENGTH = 2
};

/* Converts metres / ohm / F per metre to cm / s per cm / dimensionless. */
CASIMIR_API casimir_status casimir_geometry_from_si(const casimir_geometry* si,
                                                    casimir_geometry* cgs);
CASIMIR_API casimir_status casimir_geometry_validate(const casimir_geometry* geometry);
CASIMIR_API casimir_status casimir_geometry_diagnostics(const casimir_geometry* geometry,
                                                        double* gap_over_radius,
                                                        double* radius_over_length,
                                                        int* warnings);
CASIMIR_API casimir_status casimir_geometry_to_params(const casimir_geometry* geometry,
                                                      casimir_pendry_params* out);
CASIMIR_API casimir_status casimir_induced_current(const casimir_geometry* geometry, double h_re,
                                                   double h_im, double omega, double* j_re,
                                                   double* j_im);
CASIMIR_API casimir_status casimir_effective_mu(const casimir_geometry* geometry, double omega,
                                                double* re, double* im);

/* ---- analysis --------------------------------------------------------- */

typedef struct casimir_grid {
  double xi_min;
  double xi_max;
  int xi_count;
  double k_min;
  double k_max;
  int k_count;
} casimir_grid;

typedef enum casimir_verdict {
  CASIMIR_NO_REPULSION_POSSIBLE = 0,
  CASIMIR_REPULSION_CANDIDATE = 1
} casimir_verdict;

typedef enum casimir_polarization { CASIMIR_TE = 0, CASIMIR_TM = 1 } casimir_polarization;

typedef struct casimir_scan_sample {
  double xi;
  double k_par;
  double left_te;
  double left_tm;
  double right_te;
  double right_tm;
} casimir_scan_sample;

typedef struct casimir_feasibility_report {
  casimir_verdict verdict;
  int analytic;
  int has_witness;
  double witness_xi;
  double witness_k_par;
  casimir_polarization witness_polarization;
  double witness_product;
  unsigned long long samples_checked;
  double min_product;
} casimir_feasibility_report;

CASIMIR_API void casimir_grid_default(casimir_grid* grid);

/* samples may be NULL; otherwise it must hold xi_count * k_count entries
 * (capacity is checked) and receives the scan in row-major order. */
CASIMIR_API casimir_status casimir_feasibility(const casimir_material* left,
                                               const casimir_material* right,
                                               const casimir_grid* grid,
                                               casimir_feasibility_report* out,
                                               casimir_scan_sample* samples, size_t capacity);

typedef enum casimir_dominance {
  CASIMIR_MAINLY_ELECTRIC = 0,
  CASIMIR_MAINLY_MAGNETIC = 1,
  CASIMIR_MIXED = 2
} casimir_dominance;

/* classes may be NULL; fractions receives electric, magnetic, mixed. */
CASIMIR_API casimir_status casimir_rule_of_thumb(const casimir_material* material,
                                                 const double* xi, size_t count,
                                                 casimir_dominance* classes, double fractions[3]);

typedef struct casimir_analyticity {
  int pass;
  double filling_factor;
  double margin;
} casimir_analyticity;

CASIMIR_API casimir_status casimir_analyticity_check_geometry(const casimir_geometry* geometry,
                                                              casimir_analyticity* out);
CASIMIR_API casimir_status casimir_analyticity_check_params(const casimir_pendry_params* params,
                                                            casimir_analyticity* out);

typedef struct casimir_kk_spec {
  double omega_min;
  double omega_max;
  int count;
  int panels_per_decade;
  int gauss_order;
  double window_fraction;
  double decades_below;
  double decades_above;
  double max_error;
  int override_asymptote; /* use asymptote instead of 1 - f */
  double asymptote;
} casimir_kk_spec;

typedef struct casimir_kk_report {
  double max_residual_real;
  double max_residual_imag;
  double max_abs_residual_real;
  double max_abs_residual_imag;
  double asymptote_used;
  double pv_error_estimate;
  unsigned long long pole_window_warnings;
} casimir_kk_report;

CASIMIR_API void casimir_kk_spec_default(casimir_kk_spec* spec);
CASIMIR_API const char* casimir_kk_relation_note(void);

/* residual_real / residual_imag may be NULL, otherwise they hold spec->count
 * relative residuals. Accepts 0 <= f < 1; dissipation must be > 0. */
CASIMIR_API casimir_status casimir_kk_check(const casimir_pendry_params* params,
                                            const casimir_kk_spec* spec, casimir_kk_report* out,
                                            double* residual_real, double* residual_imag);

#ifdef __cplusplus
}
#endif

#endif /* CASIMIR_CASIMIR_H */
