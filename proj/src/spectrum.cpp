#include "fqwell/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fqwell/errors.hpp"

namespace fqwell {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr long double kHalfPiL = std::numbers::pi_v<long double> / 2.0L;
constexpr int kMaxIterations = 200;
// Newton stops once a step is within a few ulps of sigma.
constexpr double kStepUlps = 4.0;

// A double root is accepted outright when both residuals sit below this
// fraction of their tolerances; otherwise neighbouring doubles are tried.
constexpr double kComfortableScore = 0.25;
constexpr int kNeighbourSpan = 3;

// Branch equation in pole-free form. On branch i the parity equations are
// equivalent to
//     F(sigma) = sigma - i pi/2 - atan2(eta(sigma), sigma) = 0,
// since tan(sigma - i pi/2) = eta/sigma (even i) and -cot(sigma - ...) (odd i)
// collapse to the same arctangent on the rising part of each curve.
// F' = 1 + eta G / ((G - sigma^alpha)(sigma^2 + eta^2)) > 0.
struct BranchEquation {
  double g;
  double alpha;
  double inv_alpha;
  double offset;  // i pi/2

  struct Value {
    double f;
    double df;
  };

  Value operator()(double sigma) const {
    const double s_alpha = positive_power(sigma, alpha);
    const double diff = std::max(g - s_alpha, 0.0);
    const double eta = positive_power(diff, inv_alpha);
    const double f = (sigma - offset) - std::atan2(eta, sigma);
    const double denom = diff * (sigma * sigma + eta * eta);
    const double df = denom > 0.0 ? 1.0 + eta * g / denom
                                  : std::numeric_limits<double>::infinity();
    return {f, df};
  }
};

struct BranchEquationL {
  long double g;
  long double alpha;
  long double offset;

  long double power(long double base, long double exponent) const {
    return base > 0.0L ? std::exp(exponent * std::log(base)) : 0.0L;
  }

  std::pair<long double, long double> operator()(long double sigma) const {
    const long double diff = std::max(g - power(sigma, alpha), 0.0L);
    const long double eta = power(diff, 1.0L / alpha);
    const long double f = (sigma - offset) - std::atan2(eta, sigma);
    const long double denom = diff * (sigma * sigma + eta * eta);
    const long double df = denom > 0.0L ? 1.0L + eta * g / denom
                                        : std::numeric_limits<long double>::infinity();
    return {f, df};
  }
};

// pi/2 split so that i * kHalfPiHi is exact for i < 2^24.
constexpr long double kHalfPiHi = 863554413089.0L / 549755813888.0L;  // 40 bits
constexpr long double kHalfPiLo = 7.44354748048662312358863973585e-13L;
constexpr int kExactReductionLimit = 1 << 24;

long double parity_curve_l(Parity parity, long double sigma) {
  const long double t = std::tan(sigma);
  return parity == Parity::Even ? sigma * t : -sigma / t;
}

// Parity curve for the level on branch i. Both parities equal
// sigma tan(sigma - i pi/2) there, and the split constant keeps the reduced
// argument accurate to long double precision. tan only ever sees |x| <= pi/4.
long double branch_curve_l(int level_index, Parity parity, long double sigma) {
  if (level_index + 1 >= kExactReductionLimit) return parity_curve_l(parity, sigma);
  const long double i = level_index;
  const long double r = (sigma - i * kHalfPiHi) - i * kHalfPiLo;
  if (r <= kHalfPiL / 2.0L) return sigma * std::tan(r);
  // Distance to the pole, taken from sigma directly so it keeps full relative precision.
  const long double next = i + 1.0L;
  return sigma / std::tan((next * kHalfPiHi - sigma) + next * kHalfPiLo);
}

long double power_l(long double base, long double exponent) {
  return base > 0.0L ? std::exp(exponent * std::log(base)) : 0.0L;
}

struct Candidate {
  double sigma = 0.0;
  double eta = 0.0;
  double score = std::numeric_limits<double>::infinity();
};

// Scores a double sigma: eta is the parity curve rounded to double, and the
// score is the larger residual measured in units of its tolerance.
Candidate score_candidate(const DimensionlessWell& w, int level_index, Parity parity,
                          double sigma) {
  Candidate c;
  c.sigma = sigma;
  if (!(sigma >= 0.0)) return c;
  const long double eta_l = branch_curve_l(level_index, parity, sigma);
  if (!(eta_l >= 0.0L) || !std::isfinite(static_cast<double>(eta_l))) return c;
  c.eta = static_cast<double>(eta_l);
  const long double alpha = w.alpha();
  const long double parity_residual = std::fabs(static_cast<long double>(c.eta) - eta_l);
  const long double constraint_residual =
      std::fabs(power_l(c.eta, alpha) + power_l(sigma, alpha) - static_cast<long double>(w.g()));
  const double scale = std::max(1.0, w.g());
  c.score = std::max(static_cast<double>(parity_residual) / kParityResidualTolerance,
                     static_cast<double>(constraint_residual) /
                         (kConstraintResidualTolerance * scale));
  return c;
}

Candidate best_nearby(const DimensionlessWell& w, int level_index, Parity parity, double sigma,
                      double lo, double hi) {
  Candidate best = score_candidate(w, level_index, parity, sigma);
  if (best.score <= kComfortableScore) return best;
  double down = sigma;
  double up = sigma;
  for (int k = 0; k < kNeighbourSpan; ++k) {
    down = std::nextafter(down, -1.0);
    up = std::nextafter(up, std::numeric_limits<double>::infinity());
    for (double s : {down, up}) {
      if (s < lo || s > hi) continue;
      const Candidate c = score_candidate(w, level_index, parity, s);
      if (c.score < best.score) best = c;
    }
  }
  return best;
}

double polish_extended(const DimensionlessWell& w, int level_index, double sigma, double lo,
                       double hi) {
  const BranchEquationL eq{w.g(), w.alpha(), static_cast<long double>(level_index) * kHalfPiL};
  long double x = sigma;
  for (int it = 0; it < 8; ++it) {
    const auto [f, df] = eq(x);
    if (f == 0.0L || !std::isfinite(static_cast<double>(df))) break;
    const long double next = std::clamp<long double>(x - f / df, lo, hi);
    if (next == x) break;
    x = next;
  }
  return static_cast<double>(x);
}

std::optional<EnergyLevel> solve_with_guess(const DimensionlessWell& w, const Branch& b,
                                            double guess) {
  const BranchEquation eq{w.g(), w.alpha(), 1.0 / w.alpha(), b.lo};
  double lo = b.lo;
  double hi = b.hi;
  if (eq(lo).f >= 0.0 || eq(hi).f <= 0.0) return std::nullopt;

  double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
  bool converged = false;
  for (int it = 0; it < kMaxIterations; ++it) {
    const auto [f, df] = eq(x);
    if (f == 0.0) {
      converged = true;
      break;
    }
    (f < 0.0 ? lo : hi) = x;
    const double step = f / df;
    const double tol = kStepUlps * std::numeric_limits<double>::epsilon() * x;
    if (std::fabs(step) <= tol) {
      x = std::clamp(x - step, b.lo, b.hi);
      converged = true;
      break;
    }
    double next = x - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
    if (hi - lo <= tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw ConvergenceError("solve_branch: no convergence on branch " +
                           std::to_string(b.level_index()));
  }

  Candidate best = best_nearby(w, b.level_index(), b.parity, x, b.lo, b.hi);
  if (best.score > 1.0) {
    const double polished = polish_extended(w, b.level_index(), x, b.lo, b.hi);
    const Candidate retry = best_nearby(w, b.level_index(), b.parity, polished, b.lo, b.hi);
    if (retry.score < best.score) best = retry;
  }

  EnergyLevel level;
  level.index = b.level_index();
  level.parity = b.parity;
  level.sigma = best.sigma;
  level.eta = best.eta;
  return level;
}

}  // namespace

double constraint_eta(const DimensionlessWell& w, double sigma) {
  const double slack = 1e-12 * std::max(1.0, w.sigma_max());
  if (!(sigma >= 0.0) || sigma > w.sigma_max() + slack) {
    throw DomainError("constraint_eta: sigma outside [0, sigma_max]");
  }
  if (sigma >= w.sigma_max()) return 0.0;
  const double diff = w.g() - positive_power(sigma, w.alpha());
  return diff > 0.0 ? positive_power(diff, 1.0 / w.alpha()) : 0.0;
}

double parity_curve(Parity parity, double sigma) {
  return parity == Parity::Even ? sigma * std::tan(sigma) : -sigma / std::tan(sigma);
}

std::optional<Branch> branch_for_level(const DimensionlessWell& w, int level_index) {
  if (level_index < 0) throw ArgumentError("branch_for_level: negative level index");
  const double lo = level_index * kHalfPi;
  if (!(lo < w.sigma_max())) return std::nullopt;
  const double pole = (level_index + 1) * kHalfPi;
  Branch b;
  b.n = level_index / 2;
  b.parity = level_index % 2 == 0 ? Parity::Even : Parity::Odd;
  b.lo = lo;
  b.hi = std::min(pole, w.sigma_max());
  b.hi_is_pole = pole <= w.sigma_max();
  return b;
}

std::vector<Branch> enumerate_branches(const DimensionlessWell& w) {
  std::vector<Branch> out;
  for (int i = 0;; ++i) {
    auto b = branch_for_level(w, i);
    if (!b) break;
    out.push_back(*b);
  }
  return out;
}

std::optional<EnergyLevel> solve_branch(const DimensionlessWell& w, const Branch& b) {
  return solve_with_guess(w, b, 0.5 * (b.lo + b.hi));
}

Spectrum solve_spectrum(const DimensionlessWell& w) {
  Spectrum s{w, {}, w.sigma_max()};
  s.levels.reserve(static_cast<std::size_t>(count_levels(w)));
  // The offset sigma - i pi/2 of the root shrinks monotonically with i, so
  // the previous offset is a good starting point for the next branch.
  double previous_offset = kHalfPi / 2.0;
  for (int i = 0;; ++i) {
    const auto b = branch_for_level(w, i);
    if (!b) break;
    const double guess = b->lo + std::min(previous_offset, b->hi - b->lo);
    auto level = solve_with_guess(w, *b, guess);
    if (!level) continue;
    previous_offset = level->sigma - b->lo;
    level->index = static_cast<int>(s.levels.size());
    s.levels.push_back(*level);
  }
  return s;
}

Spectrum solve_spectrum(const WellParameters& p) {
  Spectrum s = solve_spectrum(nondimensionalize(p));
  for (auto& level : s.levels) level = with_energy(level, p);
  return s;
}

int count_levels(const DimensionlessWell& w) {
  const double sigma_max = w.sigma_max();
  int count = static_cast<int>(std::floor(2.0 * sigma_max / std::numbers::pi)) + 1;
  // Reconcile the closed form with the branch openings actually compared
  // against sigma_max, so ties at multiples of pi/2 resolve identically.
  while (count > 1 && !((count - 1) * kHalfPi < sigma_max)) --count;
  while (count * kHalfPi < sigma_max) ++count;
  return count;
}

double infinite_well_limit(double alpha, int n) {
  (void)LevyIndex(alpha);
  if (n < 0) throw ArgumentError("infinite_well_limit: negative level index");
  return (n + 1) * kHalfPi;
}

LevelResiduals level_residuals(const DimensionlessWell& w, const EnergyLevel& level) {
  const long double sigma = level.sigma;
  const long double eta = level.eta;
  const long double alpha = w.alpha();
  LevelResiduals r;
  r.parity = static_cast<double>(std::fabs(eta - parity_curve_l(level.parity, sigma)));
  r.constraint = static_cast<double>(
      std::fabs(power_l(eta, alpha) + power_l(sigma, alpha) - static_cast<long double>(w.g())));
  return r;
}

}  // namespace fqwell
