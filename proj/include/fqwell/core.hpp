#pragma once

// Domain types and the fractional dispersion relations.
//
// A particle in the symmetric rectangular well
//
//     V(x) = U  for |x| > a,     V(x) = 0  for |x| <= a
//
// with kinetic term D_alpha |p|^alpha has, at energy 0 <= E < U,
//
//     kappa = (1/hbar) ((U - E) / D_alpha)^(1/alpha)   outside,
//     k     = (1/hbar) (E / D_alpha)^(1/alpha)         inside.
//
// With sigma = k a and eta = kappa a the pair lies on the curve
// eta^alpha + sigma^alpha = G, G = a^alpha U / (hbar^alpha D_alpha), so the
// dimensionless spectrum depends on (G, alpha) only. Everything downstream
// works in that form; physical units are attached at the edges.

#include <complex>
#include <optional>
#include <string_view>

namespace fqwell {

/// base^exponent for base >= 0, evaluated as exp(exponent * ln(base));
/// a zero base gives zero.
double positive_power(double base, double exponent);

/// Levy index alpha, restricted to 1 < alpha <= 2.
class LevyIndex {
 public:
  explicit LevyIndex(double alpha);

  double value() const noexcept { return alpha_; }
  double inverse() const noexcept { return 1.0 / alpha_; }

  friend bool operator==(LevyIndex, LevyIndex) = default;

 private:
  double alpha_;
};

/// Physical description of the well. Units are whatever the caller uses
/// consistently (CGS: cm, erg, erg^(1-alpha) cm^alpha s^-alpha, erg s).
class WellParameters {
 public:
  WellParameters(double half_width, double depth, double scale_factor, double hbar,
                 double alpha);

  double half_width() const noexcept { return half_width_; }
  double depth() const noexcept { return depth_; }
  double scale_factor() const noexcept { return scale_factor_; }
  double hbar() const noexcept { return hbar_; }
  LevyIndex levy() const noexcept { return alpha_; }
  double alpha() const noexcept { return alpha_.value(); }

 private:
  double half_width_;
  double depth_;
  double scale_factor_;
  double hbar_;
  LevyIndex alpha_;
};

/// The pair (G, alpha). sigma_max = G^(1/alpha) is the largest interior
/// wavenumber (in units of 1/a) a bound state can have.
class DimensionlessWell {
 public:
  DimensionlessWell(double g, double alpha);

  /// Builds the well whose sigma_max is exactly `sigma_max`; G is derived.
  static DimensionlessWell from_sigma_max(double sigma_max, double alpha);

  double g() const noexcept { return g_; }
  double alpha() const noexcept { return alpha_.value(); }
  LevyIndex levy() const noexcept { return alpha_; }
  double sigma_max() const noexcept { return sigma_max_; }

 private:
  DimensionlessWell(double g, double alpha, double sigma_max);

  double g_;
  LevyIndex alpha_;
  double sigma_max_;
};

enum class Parity { Even, Odd };

std::string_view to_string(Parity parity);

struct EnergyLevel {
  int index = 0;
  Parity parity = Parity::Even;
  double sigma = 0.0;  // k a
  double eta = 0.0;    // kappa a
  std::optional<double> energy;  // set only when physical units are attached
};

struct StationaryPhase {
  double energy = 0.0;
  double time = 0.0;
};

/// Exterior decay constant kappa. Requires 0 <= e < U.
double kappa_of_energy(const WellParameters& p, double e);

/// Interior wavenumber k. Requires e >= 0.
double k_of_energy(const WellParameters& p, double e);

/// Inverse of k_of_energy: E = D_alpha (hbar k)^alpha.
double energy_of_k(const WellParameters& p, double k);

/// Inverse of kappa_of_energy: E = U - D_alpha (hbar kappa)^alpha.
double energy_of_kappa(const WellParameters& p, double kappa);

/// E = D_alpha (hbar sigma / a)^alpha.
double energy_of_sigma(const WellParameters& p, double sigma);

/// E / U = sigma^alpha / G.
double energy_of_sigma(const DimensionlessWell& w, double sigma);

/// G = a^alpha U / (hbar^alpha D_alpha). Throws OverflowError if G is not finite.
DimensionlessWell nondimensionalize(const WellParameters& p);

/// exp(-i E t / hbar).
std::complex<double> stationary_phase(const StationaryPhase& s, double hbar);

/// Attaches E = D_alpha (hbar sigma / a)^alpha to a dimensionless level.
EnergyLevel with_energy(EnergyLevel level, const WellParameters& p);

namespace units {

// CODATA 2018.
inline constexpr double hbar_cgs = 1.054571817e-27;      // erg s
inline constexpr double hbar_ev_s = 6.582119569e-16;     // eV s
inline constexpr double electron_mass_g = 9.1093837015e-28;
inline constexpr double electron_mass_ev = 0.51099895000e6;  // eV / c^2
inline constexpr double speed_of_light_nm_s = 2.99792458e17;

/// Electron mass in eV s^2 / nm^2, the mass unit matching (eV, nm, eV s).
inline constexpr double electron_mass_ev_nm =
    electron_mass_ev / (speed_of_light_nm_s * speed_of_light_nm_s);

/// D_2 = 1 / (2 m) for standard quantum mechanics.
inline constexpr double standard_scale_factor(double mass) { return 1.0 / (2.0 * mass); }

}  // namespace units

}  // namespace fqwell
