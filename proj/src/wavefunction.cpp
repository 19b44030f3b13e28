#include "fqwell/wavefunction.hpp"

#include <algorithm>
#include <cmath>

#include "fqwell/errors.hpp"

namespace fqwell {

namespace {

// Matching-equation residual of a level relative to max(1, eta), in
// extended precision so near-pole levels are not penalised by tan rounding.
double relative_parity_residual(const EnergyLevel& level) {
  const long double sigma = level.sigma;
  const long double t = std::tan(sigma);
  const long double curve = level.parity == Parity::Even ? sigma * t : -sigma / t;
  const long double eta = level.eta;
  return static_cast<double>(std::fabs(eta - curve) / std::max(1.0L, std::fabs(eta)));
}

}  // namespace

Eigenfunction::Eigenfunction(const EnergyLevel& level, double half_width, double c_inside)
    : level_(level),
      half_width_(half_width),
      k_(level.sigma / half_width),
      kappa_(level.eta / half_width),
      c_inside_(c_inside) {
  const double ka = k_ * half_width_;
  edge_ = c_inside_ * (level_.parity == Parity::Even ? std::cos(ka) : std::sin(ka));
  const double oscillating = level_.parity == Parity::Even
                                 ? 1.0 + std::sin(2.0 * ka) / (2.0 * ka)
                                 : 1.0 - std::sin(2.0 * ka) / (2.0 * ka);
  // Interior: C^2 a (1 +/- sin(2ka)/(2ka)); both tails: phi(a)^2 / kappa.
  norm_ = c_inside_ * c_inside_ * half_width_ * oscillating + edge_ * edge_ / kappa_;
}

double Eigenfunction::b_right() const { return edge_ * std::exp(kappa_ * half_width_); }

double Eigenfunction::a_left() const {
  return level_.parity == Parity::Even ? b_right() : -b_right();
}

Eigenfunction Eigenfunction::scaled(double factor) const {
  return Eigenfunction(level_, half_width_, c_inside_ * factor);
}

Eigenfunction match_constants(const EnergyLevel& level, double half_width,
                              double residual_limit) {
  if (!std::isfinite(half_width) || !(half_width > 0.0)) {
    throw ArgumentError("a: must be finite and > 0");
  }
  if (!(level.sigma > 0.0) || !(level.eta > 0.0)) {
    throw DomainError("match_constants: level needs sigma > 0 and eta > 0");
  }
  if (!(relative_parity_residual(level) <= residual_limit)) {
    throw DomainError("match_constants: level does not satisfy its matching equation");
  }
  return Eigenfunction(level, half_width, 1.0);
}

Eigenfunction normalize(const Eigenfunction& f) { return f.scaled(1.0 / std::sqrt(f.norm())); }

double evaluate(const Eigenfunction& f, double x) {
  const double a = f.half_width();
  const double ax = std::fabs(x);
  double value;
  if (ax <= a) {
    const double kx = f.wavenumber() * ax;
    value = f.c_inside() * (f.parity() == Parity::Even ? std::cos(kx) : std::sin(kx));
  } else {
    value = f.edge_value() * std::exp(-f.decay_constant() * (ax - a));
  }
  return (f.parity() == Parity::Odd && x < 0.0) ? -value : value;
}

double derivative_inside_edge(const Eigenfunction& f) {
  const double k = f.wavenumber();
  const double ka = k * f.half_width();
  return f.parity() == Parity::Even ? -f.c_inside() * k * std::sin(ka)
                                    : f.c_inside() * k * std::cos(ka);
}

double derivative_outside_edge(const Eigenfunction& f) {
  return -f.decay_constant() * f.edge_value();
}

double derivative_residual(const Eigenfunction& f) {
  const double inside = derivative_inside_edge(f);
  const double outside = derivative_outside_edge(f);
  const double scale = std::max(std::fabs(f.c_inside()) * f.wavenumber(),
                                std::fabs(f.decay_constant() * f.edge_value()));
  return std::fabs(inside - outside) / scale;
}

std::vector<Sample> sample(const Eigenfunction& f, double x_min, double x_max,
                           std::size_t n_points) {
  if (n_points < 2) throw ArgumentError("samples: need at least 2 points");
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
    throw ArgumentError("xmin/xmax: need finite xmin < xmax");
  }
  std::vector<Sample> out(n_points);
  const double last = static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double left = static_cast<double>(n_points - 1 - i);
    const double right = static_cast<double>(i);
    const double x = (x_min * left + x_max * right) / last;
    out[i] = {x, evaluate(f, x)};
  }
  return out;
}

}  // namespace fqwell
