#include "fqwell/cli/config.hpp"

#include <cmath>
#include <string>

#include <json.hpp>

namespace fqwell::cli {

namespace {

using nlohmann::json;

template <typename T>
void read_number(const json& doc, const char* key, std::optional<T>& slot) {
  const auto it = doc.find(key);
  if (it == doc.end()) return;
  if constexpr (std::is_integral_v<T>) {
    if (!it->is_number_integer()) throw ConfigError(std::string(key) + ": expected an integer");
  } else {
    if (!it->is_number()) throw ConfigError(std::string(key) + ": expected a number");
  }
  slot = it->get<T>();
}

void read_string(const json& doc, const char* key, std::optional<std::string>& slot) {
  const auto it = doc.find(key);
  if (it == doc.end()) return;
  if (!it->is_string()) throw ConfigError(std::string(key) + ": expected a string");
  slot = it->get<std::string>();
}

template <typename T>
void take(std::optional<T>& base, const std::optional<T>& top) {
  if (top) base = top;
}

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ConfigError(field + ": " + what);
}

double require_positive(const std::optional<double>& v, const char* field) {
  if (!v) fail(field, "required");
  if (!std::isfinite(*v) || !(*v > 0.0)) fail(field, "must be finite and > 0");
  return *v;
}

void check_alpha(double alpha, const char* field) {
  if (!std::isfinite(alpha) || !(alpha > 1.0 && alpha <= 2.0)) {
    fail(field, "must satisfy 1 < alpha <= 2 (got " + std::to_string(alpha) + ")");
  }
}

constexpr const char* kPhysicalKeys[] = {"a", "depth", "dalpha", "hbar"};

}  // namespace

std::string_view to_string(Mode mode) {
  return mode == Mode::Dimensionless ? "dimensionless" : "physical";
}

std::string_view to_string(SweepVariable var) { return var == SweepVariable::Alpha ? "alpha" : "g"; }

RawConfig parse_config_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be a JSON object");

  static const char* const known[] = {"mode",  "g",    "alpha",     "a",    "depth", "dalpha",
                                      "hbar",  "format", "level",   "samples", "xmin", "xmax",
                                      "sweep_var", "from", "to",    "steps", "grid_n", "grid_l",
                                      "schema"};
  for (const auto& item : doc.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || item.key() == k;
    if (!ok) throw ConfigError(item.key() + ": unknown config field");
  }

  RawConfig raw;
  read_string(doc, "mode", raw.mode);
  read_number(doc, "g", raw.g);
  read_number(doc, "alpha", raw.alpha);
  read_number(doc, "a", raw.a);
  read_number(doc, "depth", raw.depth);
  read_number(doc, "dalpha", raw.dalpha);
  read_number(doc, "hbar", raw.hbar);
  read_string(doc, "format", raw.format);
  read_number(doc, "level", raw.level);
  read_number(doc, "samples", raw.samples);
  read_number(doc, "xmin", raw.xmin);
  read_number(doc, "xmax", raw.xmax);
  read_string(doc, "sweep_var", raw.sweep_var);
  read_number(doc, "from", raw.from);
  read_number(doc, "to", raw.to);
  read_number(doc, "steps", raw.steps);
  read_number(doc, "grid_n", raw.grid_n);
  read_number(doc, "grid_l", raw.grid_l);
  return raw;
}

RawConfig overlay(RawConfig base, const RawConfig& top) {
  take(base.mode, top.mode);
  take(base.g, top.g);
  take(base.alpha, top.alpha);
  take(base.a, top.a);
  take(base.depth, top.depth);
  take(base.dalpha, top.dalpha);
  take(base.hbar, top.hbar);
  take(base.format, top.format);
  take(base.level, top.level);
  take(base.samples, top.samples);
  take(base.xmin, top.xmin);
  take(base.xmax, top.xmax);
  take(base.sweep_var, top.sweep_var);
  take(base.from, top.from);
  take(base.to, top.to);
  take(base.steps, top.steps);
  take(base.grid_n, top.grid_n);
  take(base.grid_l, top.grid_l);
  return base;
}

JobConfig resolve(const RawConfig& raw, Command command) {
  JobConfig cfg;
  cfg.command = command;

  if (raw.format) {
    if (*raw.format == "json") cfg.format = OutputFormat::Json;
    else if (*raw.format == "csv") cfg.format = OutputFormat::Csv;
    else fail("format", "expected json or csv");
  }

  const std::optional<double> physical_values[] = {raw.a, raw.depth, raw.dalpha, raw.hbar};
  const bool any_physical = raw.a || raw.depth || raw.dalpha || raw.hbar;
  if (raw.mode) {
    if (*raw.mode == "dimensionless") cfg.mode = Mode::Dimensionless;
    else if (*raw.mode == "physical") cfg.mode = Mode::Physical;
    else fail("mode", "expected dimensionless or physical");
  } else {
    cfg.mode = (any_physical && !raw.g) ? Mode::Physical : Mode::Dimensionless;
  }

  if (command == Command::Sweep) {
    if (!raw.sweep_var) fail("sweep_var", "required for sweep (alpha or g)");
    if (*raw.sweep_var == "alpha") cfg.sweep_var = SweepVariable::Alpha;
    else if (*raw.sweep_var == "g") cfg.sweep_var = SweepVariable::G;
    else fail("sweep_var", "expected alpha or g");
  }
  const bool sweeping_alpha = command == Command::Sweep && cfg.sweep_var == SweepVariable::Alpha;
  const bool sweeping_g = command == Command::Sweep && cfg.sweep_var == SweepVariable::G;

  if (cfg.mode == Mode::Dimensionless) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (physical_values[i]) fail(kPhysicalKeys[i], "not allowed in dimensionless mode");
    }
    if (command == Command::Compare) {
      fail("mode", "compare needs physical mode (a, depth, dalpha, hbar) to size the grid");
    }
    if (!sweeping_g) cfg.g = require_positive(raw.g, "g");
  } else {
    if (raw.g) fail("g", "not allowed in physical mode");
    if (sweeping_g) fail("sweep_var", "a g sweep needs dimensionless mode");
    PhysicalFields p;
    p.a = require_positive(raw.a, "a");
    if (command == Command::Compare) {
      if (!raw.depth) fail("depth", "required");
      if (!std::isfinite(*raw.depth) || *raw.depth < 0.0) fail("depth", "must be finite and >= 0");
      p.depth = *raw.depth;
    } else {
      p.depth = require_positive(raw.depth, "depth");
    }
    p.dalpha = require_positive(raw.dalpha, "dalpha");
    p.hbar = require_positive(raw.hbar, "hbar");
    cfg.physical = p;
  }

  if (!sweeping_alpha) {
    if (!raw.alpha) fail("alpha", "required");
    check_alpha(*raw.alpha, "alpha");
    cfg.alpha = raw.alpha;
  }

  if (raw.level) {
    if (*raw.level < 0) fail("level", "must be >= 0");
    cfg.level = static_cast<int>(*raw.level);
  }
  if (raw.samples) {
    if (*raw.samples < 2) fail("samples", "must be >= 2");
    cfg.samples = static_cast<std::size_t>(*raw.samples);
  }
  cfg.xmin = raw.xmin;
  cfg.xmax = raw.xmax;
  if (cfg.xmin && !std::isfinite(*cfg.xmin)) fail("xmin", "must be finite");
  if (cfg.xmax && !std::isfinite(*cfg.xmax)) fail("xmax", "must be finite");

  if (command == Command::Sweep) {
    if (!raw.from) fail("from", "required for sweep");
    if (!raw.to) fail("to", "required for sweep");
    if (!raw.steps) fail("steps", "required for sweep");
    if (*raw.steps < 2) fail("steps", "a sweep needs at least 2 samples");
    cfg.from = *raw.from;
    cfg.to = *raw.to;
    cfg.steps = static_cast<int>(*raw.steps);
    if (!(cfg.from < cfg.to)) fail("from", "must be < to");
    if (sweeping_alpha) {
      check_alpha(cfg.from, "from");
      check_alpha(cfg.to, "to");
    } else {
      if (!std::isfinite(cfg.from) || !(cfg.from > 0.0)) fail("from", "g must be > 0");
      if (!std::isfinite(cfg.to)) fail("to", "must be finite");
    }
  }

  if (raw.grid_n) {
    if (*raw.grid_n < 16 || *raw.grid_n % 2 != 0) fail("grid_n", "must be even and >= 16");
    cfg.grid_n = static_cast<std::size_t>(*raw.grid_n);
  }
  if (raw.grid_l) {
    if (!std::isfinite(*raw.grid_l) || !(*raw.grid_l > 0.0)) fail("grid_l", "must be finite and > 0");
    cfg.grid_l = raw.grid_l;
  }
  return cfg;
}

}  // namespace fqwell::cli
