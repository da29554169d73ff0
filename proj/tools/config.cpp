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

#include "config.hpp"

#include <openssl/evp.h>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

#include "casimir/casimir.h"

namespace casimir::cli {
namespace {

using boost::property_tree::ptree;

enum class Unit { Dimensionless, Frequency, Length };

struct ParamRule {
  std::string name;
  Unit unit;
  std::function<bool(double)> ok;
  const char* requirement;
};

bool positive(double x) { return x > 0.0; }
bool non_negative(double x) { return x >= 0.0; }
bool open_unit(double x) { return x > 0.0 && x < 1.0; }

const std::map<std::string, std::vector<ParamRule>>& model_rules() {
  static const std::map<std::string, std::vector<ParamRule>> rules = {
      {"vacuum", {}},
      {"constant", {{"value", Unit::Dimensionless, non_negative, "must be >= 0"}}},
      {"drude",
       {{"plasma", Unit::Frequency, positive, "must be > 0"},
        {"gamma", Unit::Frequency, non_negative, "must be >= 0"}}},
      {"drude_lorentz",
       {{"strength", Unit::Frequency, non_negative, "must be >= 0"},
        {"resonance", Unit::Frequency, positive, "must be > 0"},
        {"gamma", Unit::Frequency, non_negative, "must be >= 0"}}},
      {"pendry",
       {{"f", Unit::Dimensionless, open_unit, "must satisfy 0 < f < 1"},
        {"resonance", Unit::Frequency, positive, "must be > 0"},
        {"gamma", Unit::Frequency, non_negative, "must be >= 0"}}},
  };
  return rules;
}

// Shortest text that reads back to the same double.
std::string fmt(double x) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

// "<number> [unit]" -> (number, unit).
std::pair<double, std::string> split_value(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  std::string number, unit, extra;
  in >> number >> unit >> extra;
  if (number.empty()) throw ConfigError(key, "missing value");
  if (!extra.empty()) throw ConfigError(key, "unexpected trailing text '" + extra + "'");
  double value = 0.0;
  const auto* end = number.data() + number.size();
  const auto [ptr, ec] = std::from_chars(number.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError(key, "not a finite number: '" + number + "'");
  }
  return {value, unit};
}

double parse_double(const std::string& key, const std::string& text, Unit unit,
                    double scale_frequency) {
  const auto [value, suffix] = split_value(key, text);
  switch (unit) {
    case Unit::Dimensionless:
      if (!suffix.empty()) throw ConfigError(key, "dimensionless value takes no unit");
      return value;
    case Unit::Frequency:
      if (suffix.empty() || suffix == "scale") return value;
      if (suffix == "rad/s") return value / scale_frequency;
      throw ConfigError(key, "unknown frequency unit '" + suffix + "' (use scale or rad/s)");
    case Unit::Length:
      if (suffix.empty() || suffix == "lambda") return value;
      if (suffix == "m") return value / casimir_lambda_metres(scale_frequency);
      throw ConfigError(key, "unknown length unit '" + suffix + "' (use lambda or m)");
  }
  return value;
}

int parse_int(const std::string& key, const std::string& text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ConfigError(key, "not an integer: '" + text + "'");
  return value;
}

std::string with_unit(double value, Unit unit) {
  switch (unit) {
    case Unit::Frequency: return fmt(value) + " scale";
    case Unit::Length: return fmt(value) + " lambda";
    case Unit::Dimensionless: break;
  }
  return fmt(value);
}

// Iterates a section, dispatching each key and rejecting unknown ones.
void for_each_key(const ptree& section, const std::string& name,
                  const std::function<bool(const std::string&, const std::string&)>& handle) {
  for (const auto& [key, node] : section) {
    if (!node.empty()) throw ConfigError(name + "." + key, "nested values are not supported");
    if (!handle(key, node.data())) throw ConfigError(name + "." + key, "unknown key");
  }
}

ModelSpec parse_model(const ptree& section, const std::string& section_name,
                      const std::string& field, double scale_frequency) {
  const std::string key = section_name + "." + field;
  ModelSpec spec;
  const auto kind = section.get_optional<std::string>(ptree::path_type(field, '\0'));
  if (kind) spec.kind = *kind;
  const auto& rules = model_rules();
  const auto it = rules.find(spec.kind);
  if (it == rules.end()) {
    throw ConfigError(key, "unknown model '" + spec.kind +
                               "' (vacuum, constant, drude, drude_lorentz, pendry)");
  }
  const std::string prefix = field + ".";
  for (const auto& [name, node] : section) {
    if (name.rfind(prefix, 0) != 0) continue;
    const std::string param = name.substr(prefix.size());
    const std::string pkey = section_name + "." + name;
    const ParamRule* rule = nullptr;
    for (const auto& r : it->second) {
      if (r.name == param) rule = &r;
    }
    if (rule == nullptr) throw ConfigError(pkey, "not a parameter of model '" + spec.kind + "'");
    const double v = parse_double(pkey, node.data(), rule->unit, scale_frequency);
    if (!rule->ok(v)) throw ConfigError(pkey, std::string(rule->requirement));
    spec.params[param] = v;
  }
  for (const auto& r : it->second) {
    if (!spec.params.count(r.name)) throw ConfigError(key + "." + r.name, "missing parameter");
  }
  return spec;
}

MaterialSpec parse_material(const ptree& section, const std::string& name, double scale) {
  for (const auto& [key, node] : section) {
    if (!node.empty()) throw ConfigError(name + "." + key, "nested values are not supported");
    const bool known = key == "epsilon" || key == "mu" || key.rfind("epsilon.", 0) == 0 ||
                       key.rfind("mu.", 0) == 0;
    if (!known) throw ConfigError(name + "." + key, "unknown key");
  }
  return {parse_model(section, name, "epsilon", scale), parse_model(section, name, "mu", scale)};
}

void require(bool ok, const std::string& key, const std::string& message) {
  if (!ok) throw ConfigError(key, message);
}

void write_model(std::ostream& os, const std::string& field, const ModelSpec& m) {
  os << field << " = " << m.kind << "\n";
  for (const auto& rule : model_rules().at(m.kind)) {
    os << field << "." << rule.name << " = " << with_unit(m.params.at(rule.name), rule.unit)
       << "\n";
  }
}

}  // namespace

const std::vector<std::string>& model_parameters(const std::string& kind) {
  static std::map<std::string, std::vector<std::string>> names = [] {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& [k, rules] : model_rules()) {
      for (const auto& r : rules) out[k].push_back(r.name);
    }
    return out;
  }();
  return names.at(kind);
}

RunConfig default_config() {
  RunConfig c;
  c.left.epsilon = {"drude", {{"plasma", 0.96}, {"gamma", 0.004}}};
  c.right.epsilon = {"drude_lorentz", {{"strength", 0.04}, {"resonance", 0.1}, {"gamma", 0.005}}};
  c.right.mu = {"pendry", {{"f", 0.5}, {"resonance", 0.1}, {"gamma", 0.005}}};
  return c;
}

RunConfig parse_config(std::istream& in) {
  ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("line " + std::to_string(e.line()), e.message());
  }

  RunConfig c = default_config();
  const std::set<std::string> sections = {"run",        "material_left", "material_right",
                                          "distances",  "quadrature",    "feasibility",
                                          "kk",         "output",        "manifest"};
  for (const auto& [name, node] : tree) {
    if (!sections.count(name)) {
      throw ConfigError(name, node.empty() ? "keys must belong to a section" : "unknown section");
    }
  }

  // Frequencies in other sections may be given in rad/s, so [run] comes first.
  if (const auto run = tree.get_child_optional("run")) {
    for_each_key(*run, "run", [&](const std::string& k, const std::string& v) {
      if (k != "scale_frequency") return false;
      const auto [value, unit] = split_value("run.scale_frequency", v);
      require(unit.empty() || unit == "rad/s", "run.scale_frequency", "unit must be rad/s");
      require(value > 0.0, "run.scale_frequency", "must be > 0");
      c.scale_frequency = value;
      return true;
    });
  }
  const double scale = c.scale_frequency;

  if (const auto s = tree.get_child_optional("material_left")) {
    c.left = parse_material(*s, "material_left", scale);
  }
  if (const auto s = tree.get_child_optional("material_right")) {
    c.right = parse_material(*s, "material_right", scale);
  }

  if (const auto s = tree.get_child_optional("distances")) {
    auto& d = c.distances;
    for_each_key(*s, "distances", [&](const std::string& k, const std::string& v) {
      const std::string key = "distances." + k;
      if (k == "min") d.min = parse_double(key, v, Unit::Length, scale);
      else if (k == "max") d.max = parse_double(key, v, Unit::Length, scale);
      else if (k == "count") d.count = parse_int(key, v);
      else if (k == "spacing") d.spacing = v;
      else return false;
      return true;
    });
  }
  require(c.distances.min > 0.0, "distances.min", "must be > 0");
  require(c.distances.count >= 1, "distances.count", "must be >= 1");
  require(c.distances.count == 1 || c.distances.max > c.distances.min, "distances.max",
          "must exceed distances.min");
  require(c.distances.spacing == "log" || c.distances.spacing == "linear", "distances.spacing",
          "must be log or linear");

  if (const auto s = tree.get_child_optional("quadrature")) {
    auto& q = c.quadrature;
    for_each_key(*s, "quadrature", [&](const std::string& k, const std::string& v) {
      const std::string key = "quadrature." + k;
      if (k == "rel_tol") q.rel_tol = parse_double(key, v, Unit::Dimensionless, scale);
      else if (k == "abs_tol") q.abs_tol = parse_double(key, v, Unit::Dimensionless, scale);
      else if (k == "max_subdivisions") q.max_subdivisions = parse_int(key, v);
      else if (k == "xi_cutoff_factor")
        q.xi_cutoff_factor = parse_double(key, v, Unit::Dimensionless, scale);
      else if (k == "u_cutoff") q.u_cutoff = parse_double(key, v, Unit::Dimensionless, scale);
      else return false;
      return true;
    });
  }
  require(c.quadrature.rel_tol >= 0.0, "quadrature.rel_tol", "must be >= 0");
  require(c.quadrature.abs_tol >= 0.0, "quadrature.abs_tol", "must be >= 0");
  require(c.quadrature.rel_tol > 0.0 || c.quadrature.abs_tol > 0.0, "quadrature.rel_tol",
          "rel_tol or abs_tol must be > 0");
  require(c.quadrature.max_subdivisions >= 1, "quadrature.max_subdivisions", "must be >= 1");
  require(c.quadrature.xi_cutoff_factor >= 30.0, "quadrature.xi_cutoff_factor", "must be >= 30");
  require(c.quadrature.u_cutoff >= 30.0, "quadrature.u_cutoff", "must be >= 30");

  if (const auto s = tree.get_child_optional("feasibility")) {
    auto& g = c.feasibility;
    for_each_key(*s, "feasibility", [&](const std::string& k, const std::string& v) {
      const std::string key = "feasibility." + k;
      if (k == "xi_min") g.xi_min = parse_double(key, v, Unit::Frequency, scale);
      else if (k == "xi_max") g.xi_max = parse_double(key, v, Unit::Frequency, scale);
      else if (k == "xi_count") g.xi_count = parse_int(key, v);
      else if (k == "k_min") g.k_min = parse_double(key, v, Unit::Dimensionless, scale);
      else if (k == "k_max") g.k_max = parse_double(key, v, Unit::Dimensionless, scale);
      else if (k == "k_count") g.k_count = parse_int(key, v);
      else return false;
      return true;
    });
  }
  require(c.feasibility.xi_count >= 32, "feasibility.xi_count", "must be >= 32");
  require(c.feasibility.k_count >= 32, "feasibility.k_count", "must be >= 32");
  require(c.feasibility.xi_min > 0.0 && c.feasibility.xi_min <= 1e-3, "feasibility.xi_min",
          "must lie in (0, 1e-3]");
  require(c.feasibility.xi_max >= 1e3, "feasibility.xi_max", "must be >= 1e3");
  require(c.feasibility.k_min > 0.0 && c.feasibility.k_min <= 1e-3, "feasibility.k_min",
          "must lie in (0, 1e-3]");
  require(c.feasibility.k_max >= 1e3, "feasibility.k_max", "must be >= 1e3");

  if (const auto s = tree.get_child_optional("kk")) {
    auto& k = c.kk;
    for_each_key(*s, "kk", [&](const std::string& name, const std::string& v) {
      const std::string key = "kk." + name;
      if (name == "f") k.f = parse_double(key, v, Unit::Dimensionless, scale);
      else if (name == "resonance") k.resonance = parse_double(key, v, Unit::Frequency, scale);
      else if (name == "gamma") k.gamma = parse_double(key, v, Unit::Frequency, scale);
      else if (name == "omega_min") k.omega_min = parse_double(key, v, Unit::Frequency, scale);
      else if (name == "omega_max") k.omega_max = parse_double(key, v, Unit::Frequency, scale);
      else if (name == "count") k.count = parse_int(key, v);
      else if (name == "panels_per_decade") k.panels_per_decade = parse_int(key, v);
      else if (name == "threshold") k.threshold = parse_double(key, v, Unit::Dimensionless, scale);
      else return false;
      return true;
    });
    require(k.f.has_value() == k.resonance.has_value() && k.f.has_value() == k.gamma.has_value(),
            "kk.f", "f, resonance and gamma must be given together");
    if (k.f) {
      require(*k.f >= 0.0 && *k.f < 1.0, "kk.f", "must satisfy 0 <= f < 1");
      require(*k.resonance > 0.0, "kk.resonance", "must be > 0");
      require(*k.gamma >= 0.0, "kk.gamma", "must be >= 0");
    }
  }
  require(c.kk.omega_min > 0.0, "kk.omega_min", "must be > 0");
  require(c.kk.omega_max > c.kk.omega_min, "kk.omega_max", "must exceed kk.omega_min");
  require(c.kk.count >= 2, "kk.count", "must be >= 2");
  require(c.kk.panels_per_decade >= 2, "kk.panels_per_decade", "must be >= 2");
  require(c.kk.threshold > 0.0, "kk.threshold", "must be > 0");

  if (const auto s = tree.get_child_optional("output")) {
    for_each_key(*s, "output", [&](const std::string& k, const std::string& v) {
      if (k == "path") {
        c.output_path = v;
      } else if (k == "si") {
        require(v == "true" || v == "false", "output.si", "must be true or false");
        c.si_columns = v == "true";
      } else {
        return false;
      }
      return true;
    });
  }
  // [manifest] carries provenance only and is ignored on load.
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  return parse_config(in);
}

std::string serialize(const RunConfig& c, bool include_path) {
  std::ostringstream os;
  os << "[run]\nscale_frequency = " << fmt(c.scale_frequency) << " rad/s\n";
  os << "\n[material_left]\n";
  write_model(os, "epsilon", c.left.epsilon);
  write_model(os, "mu", c.left.mu);
  os << "\n[material_right]\n";
  write_model(os, "epsilon", c.right.epsilon);
  write_model(os, "mu", c.right.mu);
  const auto& d = c.distances;
  os << "\n[distances]\nmin = " << with_unit(d.min, Unit::Length)
     << "\nmax = " << with_unit(d.max, Unit::Length) << "\ncount = " << d.count
     << "\nspacing = " << d.spacing << "\n";
  const auto& q = c.quadrature;
  os << "\n[quadrature]\nrel_tol = " << fmt(q.rel_tol) << "\nabs_tol = " << fmt(q.abs_tol)
     << "\nmax_subdivisions = " << q.max_subdivisions
     << "\nxi_cutoff_factor = " << fmt(q.xi_cutoff_factor) << "\nu_cutoff = " << fmt(q.u_cutoff)
     << "\n";
  const auto& g = c.feasibility;
  os << "\n[feasibility]\nxi_min = " << with_unit(g.xi_min, Unit::Frequency)
     << "\nxi_max = " << with_unit(g.xi_max, Unit::Frequency) << "\nxi_count = " << g.xi_count
     << "\nk_min = " << fmt(g.k_min) << "\nk_max = " << fmt(g.k_max)
     << "\nk_count = " << g.k_count << "\n";
  const auto& k = c.kk;
  os << "\n[kk]\n";
  if (k.f) {
    os << "f = " << fmt(*k.f) << "\nresonance = " << with_unit(*k.resonance, Unit::Frequency)
       << "\ngamma = " << with_unit(*k.gamma, Unit::Frequency) << "\n";
  }
  os << "omega_min = " << with_unit(k.omega_min, Unit::Frequency)
     << "\nomega_max = " << with_unit(k.omega_max, Unit::Frequency) << "\ncount = " << k.count
     << "\npanels_per_decade = " << k.panels_per_decade << "\nthreshold = " << fmt(k.threshold)
     << "\n";
  os << "\n[output]\nsi = " << (c.si_columns ? "true" : "false") << "\n";
  if (include_path && !c.output_path.empty()) os << "path = " << c.output_path << "\n";
  return os.str();
}

std::string config_digest(const RunConfig& config) {
  const std::string text = serialize(config, false);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < length; ++i) os << std::setw(2) << static_cast<int>(digest[i]);
  return os.str();
}

std::vector<double> distance_grid(const DistanceSpec& spec) {
  std::vector<double> out(static_cast<std::size_t>(spec.count));
  if (spec.count == 1) {
    out[0] = spec.min;
    return out;
  }
  const double n = spec.count - 1;
  for (int i = 0; i < spec.count; ++i) {
    if (spec.spacing == "log") {
      out[i] = spec.min * std::pow(spec.max / spec.min, i / n);
    } else {
      out[i] = spec.min + (spec.max - spec.min) * (i / n);
    }
  }
  out.front() = spec.min;
  out.back() = spec.max;
  return out;
}

}  // namespace casimir::cli
