#pragma once

// Bound-state roots of the matching equations
//
//     eta =  sigma tan sigma   (even)
//     eta = -sigma cot sigma   (odd)
//
// on the constraint curve eta^alpha + sigma^alpha = G.
//
// Level i lives on branch [i pi/2, (i+1) pi/2): even levels on the rising
// part of sigma tan sigma, odd levels on the rising part of -sigma cot sigma.
// On each branch the parity curve rises from 0 to +inf while the constraint
// curve falls, so there is at most one intersection, and exactly one when the
// branch opens strictly below sigma_max = G^(1/alpha).

#include <optional>
#include <vector>

#include "fqwell/core.hpp"

namespace fqwell {

struct Branch {
  int n = 0;  // ordinal among branches of the same parity
  Parity parity = Parity::Even;
  double lo = 0.0;
  double hi = 0.0;        // min(pole, sigma_max)
  bool hi_is_pole = true; // false when clipped at sigma_max

  /// Position of the branch in the interleaved spectrum: 2n (even), 2n+1 (odd).
  int level_index() const noexcept { return 2 * n + (parity == Parity::Odd ? 1 : 0); }
};

struct Spectrum {
  DimensionlessWell well;
  std::vector<EnergyLevel> levels;
  double sigma_max = 0.0;
};

/// Residual tolerances every returned level meets.
inline constexpr double kParityResidualTolerance = 1e-10;
inline constexpr double kConstraintResidualTolerance = 1e-10;  // times max(1, G)

/// eta on the constraint curve, (G - sigma^alpha)^(1/alpha).
/// Throws DomainError when sigma lies outside [0, sigma_max] beyond rounding.
double constraint_eta(const DimensionlessWell& w, double sigma);

/// sigma tan sigma or -sigma cot sigma.
double parity_curve(Parity parity, double sigma);

/// Branch hosting level `level_index`, or nullopt when that branch opens at
/// or above sigma_max. A branch opening exactly at sigma_max would meet the
/// constraint at eta = 0 (E = U), which is not a bound state.
std::optional<Branch> branch_for_level(const DimensionlessWell& w, int level_index);

std::vector<Branch> enumerate_branches(const DimensionlessWell& w);

/// Root on one branch; nullopt if the branch carries no sign change.
/// Throws ConvergenceError if the iteration budget runs out.
std::optional<EnergyLevel> solve_branch(const DimensionlessWell& w, const Branch& b);

Spectrum solve_spectrum(const DimensionlessWell& w);

/// Dimensionless spectrum with physical energies attached to every level.
Spectrum solve_spectrum(const WellParameters& p);

/// floor(2 sigma_max / pi) + 1, minus the threshold level when sigma_max is
/// an exact multiple of pi/2.
int count_levels(const DimensionlessWell& w);

/// G -> infinity limit of the n-th root, (n + 1) pi / 2.
double infinite_well_limit(double alpha, int n);

struct LevelResiduals {
  double parity = 0.0;      // |eta - parity_curve(sigma)|
  double constraint = 0.0;  // |eta^alpha + sigma^alpha - G|
};

/// Residuals of a level, evaluated in extended precision on the stored doubles.
LevelResiduals level_residuals(const DimensionlessWell& w, const EnergyLevel& level);

}  // namespace fqwell
