#pragma once

// Piecewise bound-state eigenfunction
//
//     phi(x) = C cos(k x)  or  D sin(k x)          |x| <= a
//     phi(x) = B exp(-kappa x)                     x > a
//     phi(x) = A exp(+kappa x)                     x < -a
//
// with the growing exponentials dropped. The exterior is stored through the
// edge value phi(a) so that deep levels (kappa a in the thousands) do not
// overflow B = phi(a) exp(kappa a).

#include <cstddef>
#include <vector>

#include "fqwell/core.hpp"

namespace fqwell {

inline constexpr double kDefaultMatchResidual = 1e-6;

class Eigenfunction {
 public:
  const EnergyLevel& level() const noexcept { return level_; }
  Parity parity() const noexcept { return level_.parity; }
  double half_width() const noexcept { return half_width_; }

  double wavenumber() const noexcept { return k_; }      // k = sigma / a
  double decay_constant() const noexcept { return kappa_; }  // kappa = eta / a

  /// C (even) or D (odd).
  double c_inside() const noexcept { return c_inside_; }
  /// phi(a); phi(-a) is +/- this for even/odd levels.
  double edge_value() const noexcept { return edge_; }
  /// B = phi(a) exp(kappa a). Infinite for very deep levels.
  double b_right() const;
  /// A = B (even) or -B (odd).
  double a_left() const;

  /// Integral of |phi|^2 over the real line for the current amplitudes.
  double norm() const noexcept { return norm_; }

  Eigenfunction scaled(double factor) const;

 private:
  friend Eigenfunction match_constants(const EnergyLevel&, double, double);

  Eigenfunction(const EnergyLevel& level, double half_width, double c_inside);

  EnergyLevel level_;
  double half_width_ = 1.0;
  double k_ = 0.0;
  double kappa_ = 0.0;
  double c_inside_ = 1.0;
  double edge_ = 0.0;
  double norm_ = 0.0;
};

/// Matches interior and exterior pieces at x = +/-a with c_inside = 1.
/// Throws DomainError if the level misses its matching equation by more than
/// `residual_limit` (relative to max(1, eta)).
Eigenfunction match_constants(const EnergyLevel& level, double half_width,
                              double residual_limit = kDefaultMatchResidual);

/// Rescales so the integral of |phi|^2 is 1, using closed-form integrals.
Eigenfunction normalize(const Eigenfunction& f);

/// phi(x). At exactly |x| = a the interior expression is used.
double evaluate(const Eigenfunction& f, double x);

/// phi'(x) from one side of the edge: interior derivative at a-, exterior at a+.
double derivative_inside_edge(const Eigenfunction& f);
double derivative_outside_edge(const Eigenfunction& f);

/// |phi'(a-) - phi'(a+)| / max|phi'|.
double derivative_residual(const Eigenfunction& f);

struct Sample {
  double x = 0.0;
  double value = 0.0;
};

/// Uniform grid of n_points samples from x_min to x_max inclusive; a grid
/// symmetric about zero maps x to exactly -x.
std::vector<Sample> sample(const Eigenfunction& f, double x_min, double x_max,
                           std::size_t n_points);

}  // namespace fqwell
