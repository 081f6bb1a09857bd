#pragma once

#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "iwave/media.hpp"
#include "iwave/output.hpp"
#include "iwave/shear.hpp"
#include "iwave/state.hpp"

// Run configuration and its flat key-value text format. Lines look like
//
//   media.rho1 = 1000        # trailing comments allowed
//
// Every key has a documented default, unknown and duplicate keys are errors,
// and all cross-field invariants are validated after parsing with the
// offending field named in the message.

namespace iwave {

enum class OutputFormat { csv, json };

struct MonochromaticIC {
  double k = 1.0;
  double eta_amp = 0.01;
  double xi_amp = 0.0;
  double phase = 0.0;
  bool operator==(const MonochromaticIC&) const = default;
};

struct GaussianIC {
  double center = 3.141592653589793;
  double width = 0.25;
  double eta_amp = 0.01;
  bool operator==(const GaussianIC&) const = default;
};

struct EvolveParams {
  double dt = 0.05;
  long n_steps = 200;
  long record_every = 10;
  bool operator==(const EvolveParams&) const = default;
};

struct OutputSpec {
  OutputFormat format = OutputFormat::csv;
  std::string path = "-";  ///< "-" writes to stdout
  bool operator==(const OutputSpec&) const = default;
};

struct RunConfig {
  MediaParams media{};
  std::optional<ShearProfile> shear;
  PeriodicGrid grid{128, 6.283185307179586};
  std::variant<MonochromaticIC, GaussianIC> initial = MonochromaticIC{};
  EvolveParams evolve{};
  int dno_order = 2;
  double solver_tol = 1e-10;
  OutputSpec output{};
  bool operator==(const RunConfig&) const = default;
};

namespace detail {

struct ConfigLine {
  int line_no = 0;
  std::string value;
  bool used = false;
};

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::string strip_comment(const std::string& line) {
  std::string out;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') quoted = !quoted;
    if (ch == '#' && !quoted) break;
    out.push_back(ch);
  }
  return out;
}

inline double parse_double(const std::string& v, const std::string& key, int line_no) {
  const std::string t = trim(v);
  char* end = nullptr;
  const double x = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size())
    throw config_error("line " + std::to_string(line_no) + ": " + key +
                       ": expected a number, got '" + t + "'");
  return x;
}

inline long parse_long(const std::string& v, const std::string& key, int line_no) {
  const std::string t = trim(v);
  char* end = nullptr;
  const long x = std::strtol(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size())
    throw config_error("line " + std::to_string(line_no) + ": " + key +
                       ": expected an integer, got '" + t + "'");
  return x;
}

inline std::string parse_string(const std::string& v) {
  std::string t = trim(v);
  if (t.size() >= 2 && t.front() == '"' && t.back() == '"') return t.substr(1, t.size() - 2);
  return t;
}

/// Comma-separated y:U pairs, e.g. "5:1.0, 20:0.5, 50:-0.5".
inline std::vector<std::pair<double, double>> parse_pairs(const std::string& v,
                                                          const std::string& key,
                                                          int line_no) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw config_error("line " + std::to_string(line_no) + ": " + key +
                         ": expected y:U pairs separated by commas");
    out.emplace_back(parse_double(item.substr(0, colon), key, line_no),
                     parse_double(item.substr(colon + 1), key, line_no));
  }
  if (out.empty())
    throw config_error("line " + std::to_string(line_no) + ": " + key + ": empty pair list");
  return out;
}

inline const char* const kKnownKeys[] = {
    "media.rho1",      "media.rho2",       "media.h1",          "media.h2",
    "media.l1",        "media.l2",         "media.kappa",       "media.gravity",
    "grid.n",          "grid.length",      "initial.type",      "initial.k",
    "initial.eta_amp", "initial.xi_amp",   "initial.phase",     "initial.center",
    "initial.width",   "evolve.dt",        "evolve.n_steps",    "evolve.record_every",
    "dno.order",       "solver.tol",       "output.format",     "output.path",
    "shear.sigma",     "shear.lower",      "shear.upper",
};

}  // namespace detail

/// Parses the flat key-value configuration format. Unknown keys, duplicate
/// keys, malformed values and invariant violations are all config_errors
/// carrying the line number or field path.
inline RunConfig parse_config(const std::string& text) {
  using detail::ConfigLine;
  std::map<std::string, ConfigLine> kv;
  {
    std::stringstream ss(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(ss, raw)) {
      ++line_no;
      const std::string line = detail::trim(detail::strip_comment(raw));
      if (line.empty()) continue;
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw config_error("line " + std::to_string(line_no) + ": expected 'key = value'");
      const std::string key = detail::trim(line.substr(0, eq));
      const std::string value = detail::trim(line.substr(eq + 1));
      bool known = false;
      for (const char* k : detail::kKnownKeys)
        if (key == k) known = true;
      if (!known)
        throw config_error("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
      if (kv.count(key))
        throw config_error("line " + std::to_string(line_no) + ": duplicate key '" + key +
                           "' (first set on line " + std::to_string(kv[key].line_no) + ")");
      kv[key] = ConfigLine{line_no, value, false};
    }
  }

  auto take = [&](const std::string& key) -> ConfigLine* {
    auto it = kv.find(key);
    if (it == kv.end()) return nullptr;
    it->second.used = true;
    return &it->second;
  };
  auto number = [&](const std::string& key, double fallback) {
    const ConfigLine* c = take(key);
    return c ? detail::parse_double(c->value, key, c->line_no) : fallback;
  };
  auto integer = [&](const std::string& key, long fallback) {
    const ConfigLine* c = take(key);
    return c ? detail::parse_long(c->value, key, c->line_no) : fallback;
  };

  RunConfig cfg;
  cfg.media.rho1 = number("media.rho1", cfg.media.rho1);
  cfg.media.rho2 = number("media.rho2", cfg.media.rho2);
  cfg.media.h1 = number("media.h1", cfg.media.h1);
  cfg.media.h2 = number("media.h2", cfg.media.h2);
  cfg.media.l1 = number("media.l1", cfg.media.l1);
  cfg.media.l2 = number("media.l2", cfg.media.l2);
  cfg.media.kappa = number("media.kappa", cfg.media.kappa);
  cfg.media.gravity = number("media.gravity", cfg.media.gravity);
  cfg.media.validate();

  {
    const long n = integer("grid.n", cfg.grid.n);
    const double length = number("grid.length", cfg.grid.length);
    try {
      cfg.grid = PeriodicGrid(static_cast<int>(n), length);
    } catch (const error& e) {
      throw config_error(std::string("grid: ") + e.what());
    }
  }

  {
    std::string type = "monochromatic";
    if (const ConfigLine* c = take("initial.type")) type = detail::parse_string(c->value);
    auto reject = [&](const char* key) {
      if (kv.count(key))
        throw config_error(std::string(key) + " is not valid for initial.type = " + type);
    };
    if (type == "monochromatic") {
      reject("initial.center");
      reject("initial.width");
      MonochromaticIC ic;
      ic.k = number("initial.k", ic.k);
      ic.eta_amp = number("initial.eta_amp", ic.eta_amp);
      ic.xi_amp = number("initial.xi_amp", ic.xi_amp);
      ic.phase = number("initial.phase", ic.phase);
      try {
        detail::lattice_mode(cfg.grid, ic.k);
      } catch (const std::exception& e) {
        throw config_error(std::string("initial.k: ") + e.what());
      }
      cfg.initial = ic;
    } else if (type == "gaussian") {
      reject("initial.k");
      reject("initial.xi_amp");
      reject("initial.phase");
      GaussianIC ic;
      ic.center = number("initial.center", ic.center);
      ic.width = number("initial.width", cfg.grid.length / 25.0);
      ic.eta_amp = number("initial.eta_amp", ic.eta_amp);
      cfg.initial = ic;
    } else {
      throw config_error("initial.type must be 'monochromatic' or 'gaussian', got '" + type +
                         "'");
    }
  }

  cfg.evolve.dt = number("evolve.dt", cfg.evolve.dt);
  cfg.evolve.n_steps = integer("evolve.n_steps", cfg.evolve.n_steps);
  cfg.evolve.record_every = integer("evolve.record_every", cfg.evolve.record_every);
  if (!std::isfinite(cfg.evolve.dt) || cfg.evolve.dt == 0.0)
    throw config_error("evolve.dt must be finite and nonzero");
  if (cfg.evolve.n_steps < 1) throw config_error("evolve.n_steps must be >= 1");
  if (cfg.evolve.record_every < 1) throw config_error("evolve.record_every must be >= 1");

  cfg.dno_order = static_cast<int>(integer("dno.order", cfg.dno_order));
  if (cfg.dno_order < 0 || cfg.dno_order > 2)
    throw config_error("dno.order must be 0, 1 or 2");
  cfg.solver_tol = number("solver.tol", cfg.solver_tol);
  if (!(cfg.solver_tol > 0.0)) throw config_error("solver.tol must be positive");

  if (const ConfigLine* c = take("output.format")) {
    const std::string f = detail::parse_string(c->value);
    if (f == "csv")
      cfg.output.format = OutputFormat::csv;
    else if (f == "json")
      cfg.output.format = OutputFormat::json;
    else
      throw config_error("output.format must be 'csv' or 'json', got '" + f + "'");
  }
  if (const ConfigLine* c = take("output.path")) cfg.output.path = detail::parse_string(c->value);

  const bool has_shear = kv.count("shear.sigma") || kv.count("shear.lower") ||
                         kv.count("shear.upper");
  if (has_shear) {
    ShearProfile sp;
    sp.media = cfg.media;
    sp.sigma = number("shear.sigma", 0.0);
    const ConfigLine* lo = take("shear.lower");
    const ConfigLine* up = take("shear.upper");
    if (!lo || !up)
      throw config_error("shear: both shear.lower and shear.upper are required");
    sp.lower = detail::parse_pairs(lo->value, "shear.lower", lo->line_no);
    sp.upper = detail::parse_pairs(up->value, "shear.upper", up->line_no);
    sp.validate();
    cfg.shear = std::move(sp);
  }

  return cfg;
}

/// Writes the fully resolved configuration back in the same flat format;
/// parse(serialize(parse(text))) == parse(text).
inline std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream os;
  auto num = [&](const char* key, double v) { os << key << " = " << format_double(v) << "\n"; };
  num("media.rho1", cfg.media.rho1);
  num("media.rho2", cfg.media.rho2);
  num("media.h1", cfg.media.h1);
  num("media.h2", cfg.media.h2);
  num("media.l1", cfg.media.l1);
  num("media.l2", cfg.media.l2);
  num("media.kappa", cfg.media.kappa);
  num("media.gravity", cfg.media.gravity);
  os << "grid.n = " << cfg.grid.n << "\n";
  num("grid.length", cfg.grid.length);
  if (const auto* m = std::get_if<MonochromaticIC>(&cfg.initial)) {
    os << "initial.type = monochromatic\n";
    num("initial.k", m->k);
    num("initial.eta_amp", m->eta_amp);
    num("initial.xi_amp", m->xi_amp);
    num("initial.phase", m->phase);
  } else {
    const auto& g = std::get<GaussianIC>(cfg.initial);
    os << "initial.type = gaussian\n";
    num("initial.center", g.center);
    num("initial.width", g.width);
    num("initial.eta_amp", g.eta_amp);
  }
  num("evolve.dt", cfg.evolve.dt);
  os << "evolve.n_steps = " << cfg.evolve.n_steps << "\n";
  os << "evolve.record_every = " << cfg.evolve.record_every << "\n";
  os << "dno.order = " << cfg.dno_order << "\n";
  num("solver.tol", cfg.solver_tol);
  os << "output.format = " << (cfg.output.format == OutputFormat::csv ? "csv" : "json") << "\n";
  os << "output.path = \"" << cfg.output.path << "\"\n";
  if (cfg.shear) {
    num("shear.sigma", cfg.shear->sigma);
    auto pairs = [&](const char* key, const std::vector<std::pair<double, double>>& seq) {
      os << key << " = ";
      for (std::size_t i = 0; i < seq.size(); ++i)
        os << format_double(seq[i].first) << ":" << format_double(seq[i].second)
           << (i + 1 < seq.size() ? ", " : "");
      os << "\n";
    };
    pairs("shear.lower", cfg.shear->lower);
    pairs("shear.upper", cfg.shear->upper);
  }
  return os.str();
}

/// Builds the configured initial state on the configured grid.
inline WaveState build_initial_state(const RunConfig& cfg) {
  if (const auto* m = std::get_if<MonochromaticIC>(&cfg.initial))
    return monochromatic_state(cfg.grid, m->k, m->eta_amp, m->xi_amp, m->phase);
  const auto& g = std::get<GaussianIC>(cfg.initial);
  try {
    return gaussian_state(cfg.grid, g.center, g.width, g.eta_amp);
  } catch (const std::invalid_argument& e) {
    throw config_error(std::string("initial: ") + e.what());
  }
}

}  // namespace iwave
