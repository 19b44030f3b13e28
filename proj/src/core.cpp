#include "fqwell/core.hpp"

#include <cmath>
#include <string>

#include "fqwell/errors.hpp"

namespace fqwell {

namespace {

void require_positive(double value, const char* field) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw ArgumentError(std::string(field) + ": must be finite and > 0 (got " +
                        std::to_string(value) + ")");
  }
}

}  // namespace

double positive_power(double base, double exponent) {
  if (base == 0.0) return 0.0;
  return std::exp(exponent * std::log(base));
}

LevyIndex::LevyIndex(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || !(alpha > 1.0 && alpha <= 2.0)) {
    throw ArgumentError("alpha: must satisfy 1 < alpha <= 2 (got " + std::to_string(alpha) +
                        ")");
  }
}

WellParameters::WellParameters(double half_width, double depth, double scale_factor,
                               double hbar, double alpha)
    : half_width_(half_width),
      depth_(depth),
      scale_factor_(scale_factor),
      hbar_(hbar),
      alpha_(alpha) {
  require_positive(half_width, "a");
  require_positive(depth, "depth");
  require_positive(scale_factor, "dalpha");
  require_positive(hbar, "hbar");
}

DimensionlessWell::DimensionlessWell(double g, double alpha)
    : DimensionlessWell(g, alpha, 0.0) {}

DimensionlessWell::DimensionlessWell(double g, double alpha, double sigma_max)
    : g_(g), alpha_(alpha), sigma_max_(sigma_max) {
  require_positive(g, "g");
  if (sigma_max_ == 0.0) sigma_max_ = positive_power(g_, alpha_.inverse());
}

DimensionlessWell DimensionlessWell::from_sigma_max(double sigma_max, double alpha) {
  require_positive(sigma_max, "sigma_max");
  const LevyIndex levy(alpha);
  return DimensionlessWell(positive_power(sigma_max, levy.value()), alpha, sigma_max);
}

std::string_view to_string(Parity parity) {
  return parity == Parity::Even ? "even" : "odd";
}

double kappa_of_energy(const WellParameters& p, double e) {
  if (!(e >= 0.0) || !(e < p.depth())) {
    throw DomainError("kappa_of_energy: energy must satisfy 0 <= E < U");
  }
  return positive_power((p.depth() - e) / p.scale_factor(), p.levy().inverse()) / p.hbar();
}

double k_of_energy(const WellParameters& p, double e) {
  if (!(e >= 0.0)) throw DomainError("k_of_energy: energy must be >= 0");
  return positive_power(e / p.scale_factor(), p.levy().inverse()) / p.hbar();
}

double energy_of_k(const WellParameters& p, double k) {
  if (!(k >= 0.0)) throw DomainError("energy_of_k: wavenumber must be >= 0");
  return p.scale_factor() * positive_power(p.hbar() * k, p.alpha());
}

double energy_of_kappa(const WellParameters& p, double kappa) {
  if (!(kappa >= 0.0)) throw DomainError("energy_of_kappa: decay constant must be >= 0");
  return p.depth() - p.scale_factor() * positive_power(p.hbar() * kappa, p.alpha());
}

double energy_of_sigma(const WellParameters& p, double sigma) {
  if (!(sigma >= 0.0)) throw DomainError("energy_of_sigma: sigma must be >= 0");
  return p.scale_factor() * positive_power(p.hbar() * sigma / p.half_width(), p.alpha());
}

double energy_of_sigma(const DimensionlessWell& w, double sigma) {
  if (!(sigma >= 0.0)) throw DomainError("energy_of_sigma: sigma must be >= 0");
  return positive_power(sigma, w.alpha()) / w.g();
}

DimensionlessWell nondimensionalize(const WellParameters& p) {
  const double alpha = p.alpha();
  const double g = positive_power(p.half_width() / p.hbar(), alpha) * p.depth() / p.scale_factor();
  if (!std::isfinite(g) || g <= 0.0) {
    throw OverflowError("nondimensionalize: well strength G is not a finite positive number");
  }
  return DimensionlessWell(g, alpha);
}

std::complex<double> stationary_phase(const StationaryPhase& s, double hbar) {
  const double angle = -s.energy * s.time / hbar;
  return {std::cos(angle), std::sin(angle)};
}

EnergyLevel with_energy(EnergyLevel level, const WellParameters& p) {
  level.energy = energy_of_sigma(p, level.sigma);
  return level;
}

}  // namespace fqwell
