#include "fqwell/spectral_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "fqwell/errors.hpp"

namespace fqwell::oracle {

namespace {

constexpr double kEdgeFraction = 1e-6;
constexpr double kMinBoxRatio = 4.0;

void require(bool ok, const char* message) {
  if (!ok) throw ArgumentError(message);
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve(const DiscreteHamiltonian& h,
                                                     int options) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix, options);
  if (solver.info() != Eigen::Success) {
    throw EigenSolveError("symmetric eigen-decomposition did not converge");
  }
  return solver;
}

double bound_cutoff(const OracleWell& well) { return well.depth - kEdgeFraction * well.depth; }

}  // namespace

double lattice_potential(const OracleWell& well, double x) {
  const double ax = std::fabs(x);
  if (ax < well.half_width) return 0.0;
  if (ax == well.half_width) return 0.5 * well.depth;
  return well.depth;
}

OracleWell OracleWell::from(const WellParameters& p) {
  return {p.half_width(), p.depth(), p.scale_factor(), p.hbar(), p.alpha()};
}

void OracleWell::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  require(positive(half_width), "a: must be finite and > 0");
  require(std::isfinite(depth) && depth >= 0.0, "depth: must be finite and >= 0");
  require(positive(scale_factor), "dalpha: must be finite and > 0");
  require(positive(hbar), "hbar: must be finite and > 0");
  (void)LevyIndex(alpha);
}

SpectralGrid::SpectralGrid(double box_half_length, std::size_t n_points)
    : half_length_(box_half_length), n_(n_points) {
  require(std::isfinite(box_half_length) && box_half_length > 0.0,
          "grid_l: box half-length must be finite and > 0");
  require(n_points >= 16 && n_points % 2 == 0, "grid_n: point count must be even and >= 16");
}

double SpectralGrid::position(std::size_t i) const {
  const double twice_offset = 2.0 * static_cast<double>(i) - static_cast<double>(n_);
  return half_length_ * twice_offset / static_cast<double>(n_);
}

double SpectralGrid::momentum(long j, double hbar) const {
  return std::numbers::pi * hbar / half_length_ * static_cast<double>(j);
}

std::vector<double> kinetic_spectrum(const OracleWell& well, const SpectralGrid& grid) {
  const long n = static_cast<long>(grid.n_points());
  std::vector<double> t;
  t.reserve(grid.n_points());
  for (long j = -n / 2; j < n / 2; ++j) {
    t.push_back(well.scale_factor *
                positive_power(std::fabs(grid.momentum(j, well.hbar)), well.alpha));
  }
  return t;
}

DiscreteHamiltonian build_hamiltonian(const OracleWell& well, const SpectralGrid& grid) {
  well.validate();
  require(grid.box_half_length() >= kMinBoxRatio * well.half_width,
          "grid_l: box half-length must be >= 4a");

  const std::size_t n = grid.n_points();
  const std::size_t half = n / 2;
  const std::vector<double> t = kinetic_spectrum(well, grid);

  // cos(2 pi m / N) for m = 0..N-1; the phase j d is reduced mod N.
  std::vector<double> cosines(n);
  for (std::size_t m = 0; m < n; ++m) {
    cosines[m] = std::cos(2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
  }

  // First row of the circulant. t[half + j] holds T_j.
  std::vector<double> row(n);
  for (std::size_t d = 0; d < n; ++d) {
    double sum = t[half];
    for (std::size_t j = 1; j < half; ++j) {
      sum += 2.0 * t[half + j] * cosines[(j * d) % n];
    }
    sum += t[0] * (d % 2 == 0 ? 1.0 : -1.0);
    row[d] = sum / static_cast<double>(n);
  }

  DiscreteHamiltonian h{grid, well, Eigen::MatrixXd(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      h.matrix(i, k) = row[(i + n - k) % n];
    }
  }
  for (std::size_t i = 0; i < n; ++i) h.matrix(i, i) += lattice_potential(well, grid.position(i));
  const Eigen::MatrixXd transpose = h.matrix.transpose();
  h.matrix = 0.5 * (h.matrix + transpose);
  return h;
}

DiscreteHamiltonian build_hamiltonian(const WellParameters& p, const SpectralGrid& grid) {
  return build_hamiltonian(OracleWell::from(p), grid);
}

std::vector<double> all_eigenvalues(const DiscreteHamiltonian& h) {
  const auto solver = solve(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

std::vector<double> bound_spectrum(const DiscreteHamiltonian& h) {
  if (h.well.depth == 0.0) return {};
  std::vector<double> values = all_eigenvalues(h);
  const double cutoff = bound_cutoff(h.well);
  values.erase(std::find_if(values.begin(), values.end(), [&](double e) { return !(e < cutoff); }),
               values.end());
  return values;
}

BoundStates bound_states(const DiscreteHamiltonian& h) {
  BoundStates out;
  if (h.well.depth == 0.0) return out;
  const auto solver = solve(h, Eigen::ComputeEigenvectors);
  const Eigen::VectorXd& values = solver.eigenvalues();
  const double cutoff = bound_cutoff(h.well);
  Eigen::Index count = 0;
  while (count < values.size() && values[count] < cutoff) ++count;
  out.energies.assign(values.data(), values.data() + count);
  out.vectors = solver.eigenvectors().leftCols(count);
  return out;
}

ComparisonReport compare(const OracleWell& well, const SpectralGrid& grid) {
  const DiscreteHamiltonian h = build_hamiltonian(well, grid);

  ComparisonReport report;
  report.well = well;
  report.box_half_length = grid.box_half_length();
  report.n_points = grid.n_points();
  report.spacing = grid.spacing();
  report.oracle_energies = bound_spectrum(h);

  if (well.depth > 0.0) {
    const WellParameters p(well.half_width, well.depth, well.scale_factor, well.hbar, well.alpha);
    const Spectrum spectrum = solve_spectrum(p);
    report.g = spectrum.well.g();
    report.levels = spectrum.levels;
  }

  for (const EnergyLevel& level : report.levels) {
    LevelGap gap;
    gap.index = level.index;
    gap.parity = level.parity;
    gap.transcendental_energy = *level.energy;
    if (!report.oracle_energies.empty()) {
      const auto nearest = std::min_element(
          report.oracle_energies.begin(), report.oracle_energies.end(), [&](double a, double b) {
            return std::fabs(a - gap.transcendental_energy) <
                   std::fabs(b - gap.transcendental_energy);
          });
      gap.oracle_energy = *nearest;
      gap.abs_gap = std::fabs(*nearest - gap.transcendental_energy);
      gap.rel_gap = *gap.abs_gap / std::fabs(gap.transcendental_energy);
      report.max_abs_gap = std::max(report.max_abs_gap.value_or(0.0), *gap.abs_gap);
      report.max_rel_gap = std::max(report.max_rel_gap.value_or(0.0), *gap.rel_gap);
    }
    report.gaps.push_back(gap);
  }
  return report;
}

}  // namespace fqwell::oracle
