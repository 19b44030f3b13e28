#include "fqwell/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "fqwell/cli/writer.hpp"
#include "fqwell/errors.hpp"
#include "fqwell/spectral_oracle.hpp"
#include "fqwell/spectrum.hpp"
#include "fqwell/wavefunction.hpp"

namespace fqwell::cli {

namespace {

constexpr std::size_t kDefaultWaveSamples = 601;
constexpr double kDefaultWaveExtent = 3.0;  // in units of a
constexpr std::size_t kDefaultCurveSamples = 200;
constexpr double kPlotOvershoot = 1.25;
constexpr double kPoleGuard = 1e-6;
constexpr double kDefaultBoxFactor = 8.0;
constexpr double kHalfPi = std::numbers::pi / 2.0;

WellParameters physical_well(const JobConfig& cfg, double alpha) {
  const PhysicalFields& p = *cfg.physical;
  return WellParameters(p.a, p.depth, p.dalpha, p.hbar, alpha);
}

/// The well as seen by the solver, plus its physical form when there is one.
struct ResolvedWell {
  DimensionlessWell dimless;
  std::optional<WellParameters> physical;
};

ResolvedWell resolve_well(const JobConfig& cfg, double g, double alpha) {
  if (cfg.mode == Mode::Physical) {
    const WellParameters p = physical_well(cfg, alpha);
    return {nondimensionalize(p), p};
  }
  return {DimensionlessWell(g, alpha), std::nullopt};
}

ResolvedWell resolve_well(const JobConfig& cfg) {
  return resolve_well(cfg, cfg.g.value_or(0.0), *cfg.alpha);
}

Spectrum solve(const ResolvedWell& w) {
  return w.physical ? solve_spectrum(*w.physical) : solve_spectrum(w.dimless);
}

void write_physical(JsonWriter& json, const JobConfig& cfg) {
  if (!cfg.physical) return;
  const PhysicalFields& p = *cfg.physical;
  json.field("a", p.a).field("depth", p.depth).field("dalpha", p.dalpha).field("hbar", p.hbar);
}

void write_header(JsonWriter& json, const JobConfig& cfg, std::string_view command) {
  json.begin_object();
  json.field("schema", kSchema);
  json.field("command", command);
  json.field("mode", to_string(cfg.mode));
}

void write_level(JsonWriter& json, const DimensionlessWell& w, const EnergyLevel& level) {
  json.begin_object();
  json.field("index", level.index);
  json.field("parity", to_string(level.parity));
  json.field("sigma", level.sigma);
  json.field("eta", level.eta);
  json.field("energy_ratio", energy_of_sigma(w, level.sigma));
  if (level.energy) json.field("energy", *level.energy);
  json.end_object();
}

void run_spectrum(const JobConfig& cfg, std::ostream& out) {
  const ResolvedWell rw = resolve_well(cfg);
  const Spectrum s = solve(rw);

  if (cfg.format == OutputFormat::Csv) {
    CsvWriter csv(out);
    std::vector<std::string> cols{"index", "parity", "sigma", "eta", "energy_ratio"};
    if (rw.physical) cols.emplace_back("energy");
    csv.header(cols);
    for (const EnergyLevel& level : s.levels) {
      csv.cell(level.index).cell(to_string(level.parity)).cell(level.sigma).cell(level.eta);
      csv.cell(energy_of_sigma(s.well, level.sigma));
      if (level.energy) csv.cell(*level.energy);
      csv.end_row();
    }
    return;
  }

  JsonWriter json(out);
  write_header(json, cfg, "spectrum");
  json.field("alpha", s.well.alpha());
  json.field("g", s.well.g());
  write_physical(json, cfg);
  json.field("sigma_max", s.sigma_max);
  json.field("level_count", s.levels.size());
  json.key("levels").begin_array();
  for (const EnergyLevel& level : s.levels) write_level(json, s.well, level);
  json.end_array();
  json.end_object();
}

void run_wavefunction(const JobConfig& cfg, std::ostream& out) {
  const ResolvedWell rw = resolve_well(cfg);
  const Spectrum s = solve(rw);
  const auto count = static_cast<int>(s.levels.size());
  if (cfg.level >= count) {
    throw DomainError("level: " + std::to_string(cfg.level) + " is out of range; this well has " +
                      std::to_string(count) + " bound level" + (count == 1 ? "" : "s") +
                      " (0.." + std::to_string(count - 1) + ")");
  }
  const EnergyLevel& level = s.levels[static_cast<std::size_t>(cfg.level)];
  const double a = cfg.half_width();
  const Eigenfunction f = normalize(match_constants(level, a));
  const double xmin = cfg.xmin.value_or(-kDefaultWaveExtent * a);
  const double xmax = cfg.xmax.value_or(kDefaultWaveExtent * a);
  const std::size_t n = cfg.samples ? cfg.samples : kDefaultWaveSamples;
  const std::vector<Sample> samples = sample(f, xmin, xmax, n);

  if (cfg.format == OutputFormat::Csv) {
    CsvWriter csv(out);
    csv.header({"x", "phi"});
    for (const Sample& p : samples) {
      csv.cell(p.x).cell(p.value);
      csv.end_row();
    }
    return;
  }

  JsonWriter json(out);
  write_header(json, cfg, "wavefunction");
  json.field("alpha", s.well.alpha());
  json.field("g", s.well.g());
  write_physical(json, cfg);
  json.key("level");
  write_level(json, s.well, level);
  json.field("half_width", a);
  json.field("k", f.wavenumber());
  json.field("kappa", f.decay_constant());
  json.field("c_inside", f.c_inside());
  json.field("b_right", f.b_right());
  json.field("a_left", f.a_left());
  json.field("edge_value", f.edge_value());
  json.field("norm", f.norm());
  json.field("derivative_residual", derivative_residual(f));
  json.key("samples").begin_array();
  for (const Sample& p : samples) {
    json.begin_array(true).value(p.x).value(p.value).end_array();
  }
  json.end_array();
  json.end_object();
}

struct Segment {
  int branch = 0;
  Parity parity = Parity::Even;
  std::vector<std::pair<double, double>> points;
};

/// sigma from lo to hi inclusive, n points, evenly spaced.
std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> xs(n);
  const double last = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i);
    xs[i] = (lo * (last - t) + hi * t) / last;
  }
  return xs;
}

void run_plotdata(const JobConfig& cfg, std::ostream& out) {
  const ResolvedWell rw = resolve_well(cfg);
  const Spectrum s = solve(rw);
  const double sigma_max = s.sigma_max;
  const double cap = kPlotOvershoot * sigma_max;
  const std::size_t n = cfg.samples ? cfg.samples : kDefaultCurveSamples;

  std::vector<Segment> segments;
  for (int i = 0; i * kHalfPi < cap; ++i) {
    const double lo = i * kHalfPi + (i == 0 ? 0.0 : kPoleGuard);
    const double hi = std::min((i + 1) * kHalfPi - kPoleGuard, cap);
    if (!(hi > lo)) break;
    Segment seg;
    seg.branch = i;
    seg.parity = i % 2 == 0 ? Parity::Even : Parity::Odd;
    for (double x : linspace(lo, hi, n)) seg.points.emplace_back(x, parity_curve(seg.parity, x));
    segments.push_back(std::move(seg));
  }
  std::vector<std::pair<double, double>> constraint;
  for (double x : linspace(0.0, sigma_max, n)) {
    constraint.emplace_back(x, constraint_eta(s.well, std::min(x, sigma_max)));
  }

  if (cfg.format == OutputFormat::Csv) {
    CsvWriter csv(out);
    csv.header({"curve", "branch", "sigma", "eta"});
    for (const Segment& seg : segments) {
      for (const auto& [x, y] : seg.points) {
        csv.cell(to_string(seg.parity)).cell(seg.branch).cell(x).cell(y);
        csv.end_row();
      }
    }
    for (const auto& [x, y] : constraint) {
      csv.cell("constraint").empty_cell().cell(x).cell(y);
      csv.end_row();
    }
    for (const EnergyLevel& level : s.levels) {
      csv.cell("marker").cell(level.index).cell(level.sigma).cell(level.eta);
      csv.end_row();
    }
    return;
  }

  auto write_points = [](JsonWriter& json, const std::vector<std::pair<double, double>>& pts) {
    json.key("points").begin_array();
    for (const auto& [x, y] : pts) json.begin_array(true).value(x).value(y).end_array();
    json.end_array();
  };

  JsonWriter json(out);
  write_header(json, cfg, "plotdata");
  json.field("alpha", s.well.alpha());
  json.field("g", s.well.g());
  write_physical(json, cfg);
  json.field("sigma_max", sigma_max);
  json.field("sigma_cap", cap);
  json.field("pole_guard", kPoleGuard);
  json.key("curves").begin_object();
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    json.key(to_string(parity)).begin_array();
    for (const Segment& seg : segments) {
      if (seg.parity != parity) continue;
      json.begin_object();
      json.field("branch", seg.branch);
      json.field("sigma_lo", seg.points.front().first);
      json.field("sigma_hi", seg.points.back().first);
      write_points(json, seg.points);
      json.end_object();
    }
    json.end_array();
  }
  json.key("constraint").begin_object();
  json.field("radius", sigma_max);
  write_points(json, constraint);
  json.end_object();
  json.end_object();
  json.key("markers").begin_array();
  for (const EnergyLevel& level : s.levels) {
    json.begin_object();
    json.field("index", level.index);
    json.field("parity", to_string(level.parity));
    json.field("sigma", level.sigma);
    json.field("eta", level.eta);
    json.end_object();
  }
  json.end_array();
  json.end_object();
}

struct SweepRow {
  double value = 0.0;
  Spectrum spectrum;
};

void run_sweep(const JobConfig& cfg, std::ostream& out) {
  std::vector<SweepRow> rows;
  const std::vector<double> values = linspace(cfg.from, cfg.to, static_cast<std::size_t>(cfg.steps));
  std::size_t widest = 0;
  for (double v : values) {
    const bool alpha_var = cfg.sweep_var == SweepVariable::Alpha;
    const double alpha = alpha_var ? v : *cfg.alpha;
    const double g = alpha_var ? cfg.g.value_or(0.0) : v;
    const ResolvedWell rw = resolve_well(cfg, g, alpha);
    rows.push_back({v, solve(rw)});
    widest = std::max(widest, rows.back().spectrum.levels.size());
  }

  if (cfg.format == OutputFormat::Csv) {
    CsvWriter csv(out);
    std::vector<std::string> cols{"value", "g", "alpha", "sigma_max", "level_count"};
    for (std::size_t i = 0; i < widest; ++i) cols.push_back("e_" + std::to_string(i));
    csv.header(cols);
    for (const SweepRow& row : rows) {
      const Spectrum& s = row.spectrum;
      csv.cell(row.value).cell(s.well.g()).cell(s.well.alpha()).cell(s.sigma_max);
      csv.cell(s.levels.size());
      for (std::size_t i = 0; i < widest; ++i) {
        if (i < s.levels.size()) csv.cell(energy_of_sigma(s.well, s.levels[i].sigma));
        else csv.empty_cell();
      }
      csv.end_row();
    }
    return;
  }

  JsonWriter json(out);
  write_header(json, cfg, "sweep");
  json.field("variable", to_string(cfg.sweep_var));
  json.field("from", cfg.from).field("to", cfg.to).field("steps", cfg.steps);
  if (cfg.sweep_var == SweepVariable::G) json.field("alpha", *cfg.alpha);
  else if (cfg.g) json.field("g", *cfg.g);
  write_physical(json, cfg);
  json.key("rows").begin_array();
  for (const SweepRow& row : rows) {
    const Spectrum& s = row.spectrum;
    json.begin_object();
    json.field("value", row.value);
    json.field("g", s.well.g());
    json.field("alpha", s.well.alpha());
    json.field("sigma_max", s.sigma_max);
    json.field("level_count", s.levels.size());
    json.key("energy_ratios").begin_array(true);
    for (const EnergyLevel& level : s.levels) json.value(energy_of_sigma(s.well, level.sigma));
    json.end_array();
    if (cfg.physical) {
      json.key("energies").begin_array(true);
      for (const EnergyLevel& level : s.levels) json.value(level.energy);
      json.end_array();
    }
    json.end_object();
  }
  json.end_array();
  json.end_object();
}

void run_compare(const JobConfig& cfg, std::ostream& out) {
  const PhysicalFields& p = *cfg.physical;
  oracle::OracleWell well{p.a, p.depth, p.dalpha, p.hbar, *cfg.alpha};
  well.validate();
  const oracle::SpectralGrid grid(cfg.grid_l.value_or(kDefaultBoxFactor * p.a), cfg.grid_n);
  const oracle::ComparisonReport r = oracle::compare(well, grid);

  if (cfg.format == OutputFormat::Csv) {
    CsvWriter csv(out);
    csv.header({"index", "parity", "transcendental_energy", "oracle_energy", "abs_gap", "rel_gap"});
    for (const oracle::LevelGap& gap : r.gaps) {
      csv.cell(gap.index).cell(to_string(gap.parity)).cell(gap.transcendental_energy);
      for (const auto& v : {gap.oracle_energy, gap.abs_gap, gap.rel_gap}) {
        if (v) csv.cell(*v);
        else csv.empty_cell();
      }
      csv.end_row();
    }
    return;
  }

  JsonWriter json(out);
  write_header(json, cfg, "compare");
  json.field("alpha", well.alpha);
  write_physical(json, cfg);
  json.field("g", r.g);
  json.key("grid").begin_object();
  json.field("box_half_length", r.box_half_length);
  json.field("n_points", r.n_points);
  json.field("spacing", r.spacing);
  json.end_object();
  json.field("transcendental_count", r.transcendental_count());
  json.field("oracle_count", r.oracle_count());
  json.field("counts_match", r.transcendental_count() == r.oracle_count());
  json.key("oracle_energies").begin_array(true);
  for (double e : r.oracle_energies) json.value(e);
  json.end_array();
  json.key("levels").begin_array();
  for (const oracle::LevelGap& gap : r.gaps) {
    json.begin_object();
    json.field("index", gap.index);
    json.field("parity", to_string(gap.parity));
    json.field("transcendental_energy", gap.transcendental_energy);
    json.field("oracle_energy", gap.oracle_energy);
    json.field("abs_gap", gap.abs_gap);
    json.field("rel_gap", gap.rel_gap);
    json.end_object();
  }
  json.end_array();
  json.field("max_abs_gap", r.max_abs_gap);
  json.field("max_rel_gap", r.max_rel_gap);
  json.end_object();
}

/// Flag values; every field stays empty unless given on the command line.
void add_job_options(CLI::App& sub, RawConfig& flags, std::string& config_path) {
  sub.add_option("--config", config_path, "JSON config file, or - for standard input");
  sub.add_option("--mode", flags.mode, "dimensionless or physical (inferred when omitted)");
  sub.add_option("--g", flags.g, "dimensionless well strength G");
  sub.add_option("--alpha", flags.alpha, "Levy index, 1 < alpha <= 2");
  sub.add_option("--a", flags.a, "well half-width");
  sub.add_option("--depth", flags.depth, "well depth U");
  sub.add_option("--dalpha", flags.dalpha, "kinetic scale factor D_alpha");
  sub.add_option("--hbar", flags.hbar, "Planck constant in the chosen units");
  sub.add_option("--format", flags.format, "json or csv");
  sub.add_option("--level", flags.level, "level index for wavefunction");
  sub.add_option("--samples", flags.samples, "sample count");
  sub.add_option("--xmin", flags.xmin, "left end of the sample range");
  sub.add_option("--xmax", flags.xmax, "right end of the sample range");
  sub.add_option("--sweep-var", flags.sweep_var, "alpha or g");
  sub.add_option("--from", flags.from, "first sweep value");
  sub.add_option("--to", flags.to, "last sweep value");
  sub.add_option("--steps", flags.steps, "number of sweep samples");
  sub.add_option("--grid-n", flags.grid_n, "grid points for compare (even, >= 16)");
  sub.add_option("--grid-l", flags.grid_l, "box half-length for compare (>= 4a)");
}

RawConfig load_config(const std::string& path, std::istream& in) {
  if (path.empty()) return {};
  if (path == "-") return parse_config_json(in);
  std::ifstream file(path);
  if (!file) throw ConfigError("config: cannot open " + path);
  return parse_config_json(file);
}

}  // namespace

void execute(const JobConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::Spectrum: run_spectrum(cfg, out); break;
    case Command::Wavefunction: run_wavefunction(cfg, out); break;
    case Command::PlotData: run_plotdata(cfg, out); break;
    case Command::Sweep: run_sweep(cfg, out); break;
    case Command::Compare: run_compare(cfg, out); break;
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bound states of a finite symmetric well with fractional kinetic energy"};
  app.name("fqwell");
  app.require_subcommand(1);

  RawConfig flags;
  std::string config_path;
  const std::pair<const char*, Command> commands[] = {
      {"spectrum", Command::Spectrum},     {"wavefunction", Command::Wavefunction},
      {"plotdata", Command::PlotData},     {"sweep", Command::Sweep},
      {"compare", Command::Compare}};
  const char* descriptions[] = {"energy levels", "normalized eigenfunction samples",
                                "curves and intersections of the graphical method",
                                "level table over a range of alpha or G",
                                "transcendental levels against a Fourier-grid Hamiltonian"};
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i].first, descriptions[i]);
    add_job_options(*sub, flags, config_path);
    subs.push_back(sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  Command command = Command::Spectrum;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) command = commands[i].second;
  }

  try {
    const JobConfig cfg = resolve(overlay(load_config(config_path, in), flags), command);
    std::ostringstream buffer;
    execute(cfg, buffer);
    out << buffer.str();
    return kExitOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolver;
  }
}

}  // namespace fqwell::cli
