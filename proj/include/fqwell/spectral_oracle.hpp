#pragma once

// Fourier-grid discretisation of H = D_alpha |p|^alpha + V(x) on the periodic
// box [-L, L) with N points. The kinetic term is diagonal in the discrete
// Fourier basis, so in position space it is the real symmetric circulant
//
//     K_ij = (1/N) sum_j T_j cos(2 pi j (i - i') / N),  T_j = D_alpha |p_j|^alpha,
//
// with p_j = (pi hbar / L) j for j = -N/2 .. N/2-1. The Nyquist node j = -N/2
// has no partner, so its eigenvalue appears once, as does j = 0; every other
// T_j appears twice.

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "fqwell/core.hpp"
#include "fqwell/spectrum.hpp"

namespace fqwell::oracle {

/// Well description for the lattice model. Unlike WellParameters the depth
/// may be zero (free particle).
struct OracleWell {
  double half_width = 1.0;
  double depth = 0.0;
  double scale_factor = 1.0;
  double hbar = 1.0;
  double alpha = 2.0;

  static OracleWell from(const WellParameters& p);

  /// Throws ArgumentError on non-positive lengths/constants, negative depth,
  /// or alpha outside (1, 2].
  void validate() const;
};

class SpectralGrid {
 public:
  /// Requires an even n_points >= 16 and box_half_length > 0.
  SpectralGrid(double box_half_length, std::size_t n_points);

  double box_half_length() const noexcept { return half_length_; }
  std::size_t n_points() const noexcept { return n_; }
  double spacing() const noexcept { return 2.0 * half_length_ / static_cast<double>(n_); }

  /// x_i = L (2i - N) / N, so position(N - i) == -position(i) exactly.
  double position(std::size_t i) const;

  /// Index of the mirror point -x_i (mod N).
  std::size_t mirror(std::size_t i) const noexcept { return (n_ - i) % n_; }

  /// p_j for signed j in [-N/2, N/2).
  double momentum(long j, double hbar) const;

 private:
  double half_length_;
  std::size_t n_;
};

struct DiscreteHamiltonian {
  SpectralGrid grid;
  OracleWell well;
  Eigen::MatrixXd matrix;
};

/// T_j for j = -N/2 .. N/2-1, in that order.
std::vector<double> kinetic_spectrum(const OracleWell& well, const SpectralGrid& grid);

/// Sampled potential: 0 inside, U outside, and U/2 on a grid point that falls
/// exactly on x = +/-a (the midpoint of the jump, which keeps the effective
/// well width at 2a instead of 2a + dx).
double lattice_potential(const OracleWell& well, double x);

/// Throws ArgumentError if L < 4a.
DiscreteHamiltonian build_hamiltonian(const OracleWell& well, const SpectralGrid& grid);
DiscreteHamiltonian build_hamiltonian(const WellParameters& p, const SpectralGrid& grid);

/// Every eigenvalue, ascending. Throws EigenSolveError on failure.
std::vector<double> all_eigenvalues(const DiscreteHamiltonian& h);

/// Eigenvalues below U - 1e-6 U, ascending.
std::vector<double> bound_spectrum(const DiscreteHamiltonian& h);

struct BoundStates {
  std::vector<double> energies;
  Eigen::MatrixXd vectors;  // one column per bound energy
};

BoundStates bound_states(const DiscreteHamiltonian& h);

struct LevelGap {
  int index = 0;
  Parity parity = Parity::Even;
  double transcendental_energy = 0.0;
  std::optional<double> oracle_energy;
  std::optional<double> abs_gap;
  std::optional<double> rel_gap;
};

struct ComparisonReport {
  OracleWell well;
  double box_half_length = 0.0;
  std::size_t n_points = 0;
  double spacing = 0.0;
  std::optional<double> g;  // absent for a free particle
  std::vector<EnergyLevel> levels;
  std::vector<double> oracle_energies;
  std::vector<LevelGap> gaps;
  std::optional<double> max_abs_gap;
  std::optional<double> max_rel_gap;

  std::size_t transcendental_count() const noexcept { return levels.size(); }
  std::size_t oracle_count() const noexcept { return oracle_energies.size(); }
};

/// Pairs each transcendental level with the nearest oracle eigenvalue. The
/// gaps are measured, never asserted.
ComparisonReport compare(const OracleWell& well, const SpectralGrid& grid);

}  // namespace fqwell::oracle
