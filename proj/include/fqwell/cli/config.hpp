#pragma once

// Job configuration: a JSON document (file or stdin) overlaid by command-line
// flags. Flags win over config fields. Field names are shared between the two
// surfaces (JSON key "grid_n" <-> flag --grid-n).

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "fqwell/core.hpp"
#include "fqwell/errors.hpp"

namespace fqwell::cli {

class ConfigError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

enum class Command { Spectrum, Wavefunction, PlotData, Sweep, Compare };
enum class Mode { Dimensionless, Physical };
enum class OutputFormat { Json, Csv };
enum class SweepVariable { Alpha, G };

std::string_view to_string(Mode mode);
std::string_view to_string(SweepVariable var);

/// Every field optional: one layer of configuration as read from JSON or flags.
struct RawConfig {
  std::optional<std::string> mode;
  std::optional<double> g;
  std::optional<double> alpha;
  std::optional<double> a;
  std::optional<double> depth;
  std::optional<double> dalpha;
  std::optional<double> hbar;
  std::optional<std::string> format;
  std::optional<long> level;
  std::optional<long> samples;
  std::optional<double> xmin;
  std::optional<double> xmax;
  std::optional<std::string> sweep_var;
  std::optional<double> from;
  std::optional<double> to;
  std::optional<long> steps;
  std::optional<long> grid_n;
  std::optional<double> grid_l;
};

/// Parses a JSON config document. Unknown keys and wrong types are ConfigErrors.
RawConfig parse_config_json(std::istream& in);

/// Fields set in `top` replace those in `base`.
RawConfig overlay(RawConfig base, const RawConfig& top);

struct PhysicalFields {
  double a = 0.0;
  double depth = 0.0;
  double dalpha = 0.0;
  double hbar = 0.0;
};

struct JobConfig {
  Command command = Command::Spectrum;
  Mode mode = Mode::Dimensionless;
  std::optional<double> g;
  std::optional<double> alpha;  // absent only when sweeping alpha
  std::optional<PhysicalFields> physical;
  OutputFormat format = OutputFormat::Json;

  int level = 0;
  std::size_t samples = 0;  // 0: command default
  std::optional<double> xmin;
  std::optional<double> xmax;

  SweepVariable sweep_var = SweepVariable::Alpha;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;

  std::size_t grid_n = 1024;
  std::optional<double> grid_l;

  /// Half-width in output coordinates: a in physical mode, 1 otherwise.
  double half_width() const { return physical ? physical->a : 1.0; }
};

/// Checks mode rules and ranges for `command`; messages start with the
/// offending field name.
JobConfig resolve(const RawConfig& raw, Command command);

}  // namespace fqwell::cli
