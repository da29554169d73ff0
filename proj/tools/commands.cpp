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

#include "commands.hpp"

#include <unistd.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "casimir/casimir.h"
#include "handles.hpp"

namespace casimir::cli {
namespace {

constexpr const char* kPressureColumns =
    "d_over_lambda,pressure_internal,pressure_pa,pressure_d3_scaled,te_part,tm_part,"
    "error_estimate,node_count";

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

// Shortest text that reads back to the same double; for key-value output.
std::string kv(double x) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

casimir_quadrature_spec to_spec(const QuadratureSettings& q) {
  return {q.rel_tol, q.abs_tol, q.max_subdivisions, q.xi_cutoff_factor, q.u_cutoff};
}

std::string header(bool status, bool si) {
  std::string h = kPressureColumns;
  if (status) h += ",status";
  if (si) h += ",d_m";
  return h + "\n";
}

std::string row(const RunConfig& c, double d, const casimir_pressure_result& r,
                const char* status, bool si) {
  std::ostringstream os;
  os << num(d) << ',' << num(r.total) << ',' << num(r.total * casimir_pressure_unit_pa(c.scale_frequency))
     << ',' << num(r.total * d * d * d) << ',' << num(r.te_part) << ',' << num(r.tm_part) << ','
     << num(r.error_estimate) << ',' << r.node_count;
  if (status != nullptr) os << ',' << status;
  if (si) os << ',' << num(d * casimir_lambda_metres(c.scale_frequency));
  os << '\n';
  return os.str();
}

// Maps library and config failures to exit codes.
template <class F>
int run_guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ApiError& e) {
    err << "error: " << casimir_status_string(e.status()) << ": " << e.what() << "\n";
    return e.status() == CASIMIR_ERROR_NO_CONVERGENCE || e.status() == CASIMIR_ERROR_INTERNAL
               ? kExitNumerical
               : kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

std::string output_path(const GlobalOptions& opts, const RunConfig& c) {
  return opts.output.empty() ? c.output_path : opts.output;
}

casimir_pendry_params kk_params(const RunConfig& c) {
  if (c.kk.f) return {*c.kk.f, *c.kk.resonance, *c.kk.gamma};
  const auto& mu = c.right.mu;
  if (mu.kind != "pendry") {
    throw ConfigError("kk.f", "no [kk] parameters and material_right.mu is not a pendry model");
  }
  return {mu.params.at("f"), mu.params.at("resonance"), mu.params.at("gamma")};
}

}  // namespace

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    os << text;
    os.flush();
    if (!os) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename onto '" + path + "': " + ec.message());
  }
}

RunConfig resolve_config(const GlobalOptions& opts) {
  RunConfig c = opts.config_path.empty() ? default_config() : load_config(opts.config_path);
  if (opts.rel_tol) {
    if (!(*opts.rel_tol > 0.0)) throw ConfigError("--rel-tol", "must be > 0");
    c.quadrature.rel_tol = *opts.rel_tol;
  }
  if (opts.threads < 1) throw ConfigError("--threads", "must be >= 1");
  if (opts.si) c.si_columns = true;
  return c;
}

int cmd_pressure(const GlobalOptions& opts, double distance, std::ostream& out,
                 std::ostream& err) {
  return run_guarded(err, [&] {
    const RunConfig c = resolve_config(opts);
    if (!(distance > 0.0)) throw ConfigError("--distance", "must be > 0");
    const auto left = make_material(c.left, "material_left");
    const auto right = make_material(c.right, "material_right");
    const auto spec = to_spec(c.quadrature);
    casimir_pressure_result r{};
    const auto status =
        casimir_pressure(left.get(), right.get(), distance, &spec, opts.threads, 0, &r);
    if (status != CASIMIR_OK && status != CASIMIR_ERROR_NO_CONVERGENCE) check(status);
    const std::string text = header(false, c.si_columns) + row(c, distance, r, nullptr, c.si_columns);
    const std::string path = output_path(opts, c);
    if (path.empty()) out << text;
    else write_atomically(path, text);
    if (status == CASIMIR_ERROR_NO_CONVERGENCE) {
      err << "error: no convergence: " << casimir_last_error() << "\n";
      return kExitNumerical;
    }
    return kExitOk;
  });
}

int cmd_sweep(const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    const RunConfig c = resolve_config(opts);
    const auto left = make_material(c.left, "material_left");
    const auto right = make_material(c.right, "material_right");
    const auto spec = to_spec(c.quadrature);
    const auto ds = distance_grid(c.distances);
    std::vector<casimir_pressure_result> results(ds.size());
    std::vector<int> converged(ds.size());
    check(casimir_pressure_sweep(left.get(), right.get(), ds.data(), ds.size(), &spec,
                                 opts.threads, results.data(), converged.data()));

    const std::string digest = config_digest(c);
    std::ostringstream csv;
    csv << "# casimir sweep\n# version " << casimir_version() << "\n# manifest sha256 " << digest
        << "\n";
    csv << header(true, c.si_columns);
    std::size_t failed = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (!converged[i]) ++failed;
      csv << row(c, ds[i], results[i], converged[i] ? "ok" : "no_convergence", c.si_columns);
    }

    const std::string path = output_path(opts, c);
    if (path.empty()) {
      out << csv.str();
    } else {
      std::ostringstream manifest;
      manifest << "; Resolved parameters of " << std::filesystem::path(path).filename().string()
               << ". Reusable as --config.\n"
               << serialize(c, false) << "\n[manifest]\ntool = casimir\nversion = "
               << casimir_version() << "\nsha256 = " << digest << "\ncommand = sweep\n";
      write_atomically(path, csv.str());
      write_atomically(path + ".manifest.ini", manifest.str());
    }
    if (failed > 0) {
      err << "error: " << failed << " of " << ds.size() << " points did not converge\n";
      return kExitNumerical;
    }
    return kExitOk;
  });
}

int cmd_feasibility(const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    const RunConfig c = resolve_config(opts);
    const auto left = make_material(c.left, "material_left");
    const auto right = make_material(c.right, "material_right");
    const auto& g = c.feasibility;
    const casimir_grid grid{g.xi_min, g.xi_max, g.xi_count, g.k_min, g.k_max, g.k_count};
    const std::string path = output_path(opts, c);
    std::vector<casimir_scan_sample> samples;
    if (!path.empty()) samples.resize(static_cast<std::size_t>(g.xi_count) * g.k_count);
    casimir_feasibility_report rep{};
    check(casimir_feasibility(left.get(), right.get(), &grid, &rep,
                              samples.empty() ? nullptr : samples.data(), samples.size()));

    out << "verdict = "
        << (rep.verdict == CASIMIR_NO_REPULSION_POSSIBLE ? "NoRepulsionPossible"
                                                          : "RepulsionCandidate");
    if (rep.analytic) out << " (analytic)";
    out << "\nsamples_checked = " << rep.samples_checked
        << "\nmin_product = " << kv(rep.min_product) << "\n";
    if (rep.has_witness) {
      out << "witness.xi = " << kv(rep.witness_xi) << "\nwitness.k_par = "
          << kv(rep.witness_k_par) << "\nwitness.polarization = "
          << (rep.witness_polarization == CASIMIR_TE ? "TE" : "TM")
          << "\nwitness.product = " << kv(rep.witness_product) << "\n";
    } else {
      out << "witness = none\n";
    }

    std::vector<double> xi(static_cast<std::size_t>(g.xi_count));
    for (int i = 0; i < g.xi_count; ++i) {
      xi[i] = g.xi_min * std::pow(g.xi_max / g.xi_min, i / double(g.xi_count - 1));
    }
    for (const auto& [name, mat] : {std::pair{"left", left.get()}, std::pair{"right", right.get()}}) {
      double fr[3];
      check(casimir_rule_of_thumb(mat, xi.data(), xi.size(), nullptr, fr));
      out << "rule_of_thumb." << name << " = electric " << kv(fr[0]) << ", magnetic "
          << kv(fr[1]) << ", mixed " << kv(fr[2]) << "\n";
    }

    if (!path.empty()) {
      std::ostringstream csv;
      csv << "xi,k_par,left_te,left_tm,right_te,right_tm,product_te,product_tm\n";
      for (const auto& s : samples) {
        csv << num(s.xi) << ',' << num(s.k_par) << ',' << num(s.left_te) << ',' << num(s.left_tm)
            << ',' << num(s.right_te) << ',' << num(s.right_tm) << ','
            << num(s.left_te * s.right_te) << ',' << num(s.left_tm * s.right_tm) << '\n';
      }
      write_atomically(path, csv.str());
      out << "scan = " << path << "\n";
    }
    return kExitOk;
  });
}

int cmd_kk_check(const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    const RunConfig c = resolve_config(opts);
    const auto params = kk_params(c);
    casimir_kk_spec spec;
    casimir_kk_spec_default(&spec);
    spec.omega_min = c.kk.omega_min;
    spec.omega_max = c.kk.omega_max;
    spec.count = c.kk.count;
    spec.panels_per_decade = c.kk.panels_per_decade;
    std::vector<double> res_re(static_cast<std::size_t>(spec.count));
    std::vector<double> res_im(res_re.size());
    casimir_kk_report rep{};
    check(casimir_kk_check(&params, &spec, &rep, res_re.data(), res_im.data()));

    const bool pass =
        rep.max_residual_real <= c.kk.threshold && rep.max_residual_imag <= c.kk.threshold;
    out << "model = pendry f " << kv(params.filling_factor) << ", resonance "
        << kv(params.resonance) << ", gamma " << kv(params.dissipation) << "\n"
        << "relation = " << casimir_kk_relation_note() << "\n"
        << "omega_min = " << kv(spec.omega_min) << "\nomega_max = " << kv(spec.omega_max)
        << "\ncount = " << spec.count << "\npanels_per_decade = " << spec.panels_per_decade
        << "\nasymptote_used = " << kv(rep.asymptote_used)
        << "\nmax_residual_real = " << kv(rep.max_residual_real)
        << "\nmax_residual_imag = " << kv(rep.max_residual_imag)
        << "\nmax_abs_residual_real = " << kv(rep.max_abs_residual_real)
        << "\nmax_abs_residual_imag = " << kv(rep.max_abs_residual_imag)
        << "\npv_error_estimate = " << kv(rep.pv_error_estimate)
        << "\npole_window_warnings = " << rep.pole_window_warnings
        << "\nthreshold = " << kv(c.kk.threshold) << "\nstatus = " << (pass ? "pass" : "fail")
        << "\n";
    if (rep.pole_window_warnings > 0) {
      err << "warning: " << rep.pole_window_warnings
          << " grid frequencies lie within the pole-subtraction window of the resonance\n";
    }

    const std::string path = output_path(opts, c);
    if (!path.empty()) {
      std::ostringstream csv;
      csv << "omega,residual_real,residual_imag\n";
      for (int i = 0; i < spec.count; ++i) {
        const double w = spec.omega_min * std::pow(spec.omega_max / spec.omega_min,
                                                   i / double(spec.count - 1));
        csv << num(w) << ',' << num(res_re[i]) << ',' << num(res_im[i]) << '\n';
      }
      write_atomically(path, csv.str());
    }
    return pass ? kExitOk : kExitNumerical;
  });
}

int cmd_homogenize(const GlobalOptions& opts, const GeometryOptions& g, std::ostream& out,
                   std::ostream& err) {
  return run_guarded(err, [&] {
    const RunConfig c = resolve_config(opts);
    if (g.units != "si" && g.units != "cgs") throw ConfigError("--units", "must be si or cgs");
    casimir_geometry geom{g.radius, g.gap, g.period, g.length, g.alpha, g.capacitance};
    if (g.units == "si") {
      casimir_geometry cgs{};
      check(casimir_geometry_from_si(&geom, &cgs));
      geom = cgs;
    }
    if (casimir_geometry_validate(&geom) != CASIMIR_OK) {
      throw ConfigError("homogenize", casimir_last_error());
    }
    casimir_pendry_params p{};
    check(casimir_geometry_to_params(&geom, &p));
    double gap_over_radius = 0.0, radius_over_length = 0.0;
    int warnings = 0;
    check(casimir_geometry_diagnostics(&geom, &gap_over_radius, &radius_over_length, &warnings));
    casimir_analyticity a{};
    check(casimir_analyticity_check_geometry(&geom, &a));

    const double scale = c.scale_frequency;
    out << "filling_factor = " << kv(p.filling_factor)
        << "\nomega_m_rad_s = " << kv(p.resonance) << "\nomega_m_scale = "
        << kv(p.resonance / scale) << "\ngamma_m_rad_s = " << kv(p.dissipation)
        << "\ngamma_m_scale = " << kv(p.dissipation / scale)
        << "\nscale_frequency_rad_s = " << kv(scale) << "\ngap_over_radius = "
        << kv(gap_over_radius) << "\nradius_over_length = " << kv(radius_over_length)
        << "\nanalyticity = " << (a.pass ? "pass" : "fail")
        << "\nanalyticity_margin = " << kv(a.margin) << "\n";
    if (warnings & CASIMIR_WARN_GAP_OVER_RADIUS) {
      out << "warning = gap/radius exceeds 0.1; thin-gap approximation is doubtful\n";
    }
    if (warnings & CASIMIR_WARN_RADIUS_OVER_LENGTH) {
      out << "warning = radius/length exceeds 0.1; long-cylinder approximation is doubtful\n";
    }
    return kExitOk;
  });
}

}  // namespace casimir::cli
