#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fqwell/errors.hpp"
#include "fqwell/spectrum.hpp"
#include "support/oracles.hpp"

using namespace fqwell;

namespace {

constexpr double kPi = std::numbers::pi;

// G = 16, alpha = 2, from a 1e-6 scan of the pole-free matching functions
// followed by bisection (50 digit reference agrees to all places shown).
constexpr double kTextbookSigma[] = {1.25235323400259, 2.47457678736983, 3.59530486716155};
constexpr double kTextbookEta[] = {3.79889607350389, 3.14268511362663, 1.75322072545487};

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("branches of sigma_max = 1") {
  const auto w = DimensionlessWell::from_sigma_max(1.0, 2.0);
  const auto branches = enumerate_branches(w);
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].parity == Parity::Even);
  CHECK(branches[0].lo == 0.0);
  CHECK(branches[0].hi == 1.0);
  CHECK_FALSE(branches[0].hi_is_pole);
}

TEST_CASE("branches of sigma_max = 4") {
  const auto branches = enumerate_branches(DimensionlessWell::from_sigma_max(4.0, 2.0));
  REQUIRE(branches.size() == 3);
  CHECK(branches[0].parity == Parity::Even);
  CHECK(branches[0].hi == doctest::Approx(kPi / 2));
  CHECK(branches[0].hi_is_pole);
  CHECK(branches[1].parity == Parity::Odd);
  CHECK(branches[1].lo == doctest::Approx(kPi / 2));
  CHECK(branches[1].hi == doctest::Approx(kPi));
  CHECK(branches[2].parity == Parity::Even);
  CHECK(branches[2].n == 1);
  CHECK(branches[2].lo == doctest::Approx(kPi));
  CHECK(branches[2].hi == 4.0);
  for (const Branch& b : branches) CHECK(b.lo < 4.0);
}

TEST_CASE("tangency at a branch opening excludes the branch") {
  const auto at_half_pi = DimensionlessWell::from_sigma_max(kPi / 2, 1.5);
  CHECK(enumerate_branches(at_half_pi).size() == 1);
  CHECK(count_levels(at_half_pi) == 1);
  CHECK(solve_spectrum(at_half_pi).levels.size() == 1);

  const auto at_pi = DimensionlessWell::from_sigma_max(kPi, 2.0);
  CHECK(count_levels(at_pi) == 2);
  CHECK(solve_spectrum(at_pi).levels.size() == 2);

  const auto just_above = DimensionlessWell::from_sigma_max(std::nextafter(kPi, 4.0), 2.0);
  CHECK(count_levels(just_above) == 3);
}

TEST_CASE("parity curves rise monotonically on their branches") {
  for (int n = 0; n < 4; ++n) {
    for (Parity parity : {Parity::Even, Parity::Odd}) {
      const double lo = n * kPi + (parity == Parity::Odd ? kPi / 2 : 0.0);
      double prev = parity_curve(parity, lo + 1e-9);
      CHECK(prev >= -1e-8);
      for (int j = 1; j < 1000; ++j) {
        const double s = lo + (kPi / 2) * j / 1000.0;
        const double v = parity_curve(parity, s);
        CHECK(v > prev);
        prev = v;
      }
    }
  }
}

TEST_CASE("constraint curve") {
  const DimensionlessWell circle(16.0, 2.0);
  for (double s : {0.0, 0.3, 2.0, 3.9}) {
    CHECK(constraint_eta(circle, s) == doctest::Approx(std::sqrt(16.0 - s * s)).epsilon(1e-14));
  }
  const DimensionlessWell w(2.0, 1.5);
  CHECK(constraint_eta(w, 0.0) == doctest::Approx(std::pow(2.0, 1 / 1.5)).epsilon(1e-15));
  CHECK(constraint_eta(w, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(constraint_eta(circle, 4.0) == 0.0);
  CHECK_THROWS_AS(constraint_eta(circle, 4.1), DomainError);
  CHECK_THROWS_AS(constraint_eta(circle, -0.1), DomainError);
}

TEST_CASE("textbook well, branch by branch") {
  const DimensionlessWell w(16.0, 2.0);
  const auto branches = enumerate_branches(w);
  REQUIRE(branches.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto level = solve_branch(w, branches[i]);
    REQUIRE(level);
    CHECK(level->sigma == doctest::Approx(kTextbookSigma[i]).epsilon(1e-13));
    CHECK(level->eta == doctest::Approx(kTextbookEta[i]).epsilon(1e-13));
  }
}

TEST_CASE("textbook well against the dense scan") {
  const DimensionlessWell w(16.0, 2.0);
  const Spectrum s = solve_spectrum(w);
  const auto roots = oracles::dense_scan(16.0, 2.0, 1e-6);
  REQUIRE(s.levels.size() == 3);
  REQUIRE(roots.size() == 3);
  const Parity expected[] = {Parity::Even, Parity::Odd, Parity::Even};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(s.levels[i].parity == expected[i]);
    CHECK(std::fabs(s.levels[i].sigma - static_cast<double>(roots[i].sigma)) < 1e-9);
    CHECK(std::fabs(static_cast<double>(roots[i].sigma) - kTextbookSigma[i]) < 1e-12);
  }
}

TEST_CASE("shallow wells keep exactly one even level") {
  for (double smax : {1e-8, 0.1, 1.0, 1.5}) {
    const Spectrum s = solve_spectrum(DimensionlessWell::from_sigma_max(smax, 1.3));
    REQUIRE(s.levels.size() == 1);
    CHECK(s.levels[0].parity == Parity::Even);
    CHECK(s.levels[0].sigma > 0.0);
    CHECK(s.levels[0].sigma < smax);
  }
  CHECK(count_levels(DimensionlessWell::from_sigma_max(1e-100, 2.0)) == 1);
  CHECK(solve_spectrum(DimensionlessWell(0.1, 1.5)).levels.size() == 1);
}

TEST_CASE("alpha = 1.5, G = 16 has five levels") {
  const DimensionlessWell w(16.0, 1.5);
  CHECK(count_levels(w) == 5);
  const Spectrum s = solve_spectrum(w);
  const auto roots = oracles::dense_scan(16.0, 1.5, 1e-5);
  REQUIRE(s.levels.size() == 5);
  REQUIRE(roots.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(std::fabs(s.levels[i].sigma - static_cast<double>(roots[i].sigma)) < 1e-9);
    CHECK((s.levels[i].parity == Parity::Odd) == roots[i].odd);
  }
}

TEST_CASE("branch outside the well has no level") {
  const DimensionlessWell w(16.0, 2.0);
  CHECK_FALSE(branch_for_level(w, 3));
  CHECK(branch_for_level(w, 2));
  CHECK_THROWS_AS(branch_for_level(w, -1), ArgumentError);
}

TEST_CASE("infinite well limit") {
  CHECK(infinite_well_limit(2.0, 0) == doctest::Approx(kPi / 2));
  CHECK(infinite_well_limit(1.5, 1) == doctest::Approx(kPi));
  CHECK(infinite_well_limit(1.2, 5) == doctest::Approx(3 * kPi));
  CHECK_THROWS_AS(infinite_well_limit(2.5, 0), ArgumentError);
}

TEST_CASE("deep wells approach the infinite well from below") {
  for (double alpha : {1.5, 2.0}) {
    const Spectrum s = solve_spectrum(DimensionlessWell(1e8, alpha));
    REQUIRE(s.levels.size() >= 10);
    for (int n = 0; n < 10; ++n) {
      const EnergyLevel& level = s.levels[static_cast<std::size_t>(n)];
      const double gap = infinite_well_limit(alpha, n) - level.sigma;
      // tan(gap) = sigma / eta exactly, so the gap is positive and at most sigma / eta.
      CHECK(gap > 0.0);
      CHECK(gap <= level.sigma / level.eta * (1 + 1e-9));
      CHECK(gap == doctest::Approx(std::atan(level.sigma / level.eta)).epsilon(1e-6));
    }
  }
}

TEST_CASE("random wells: ordering, parity, count and residuals") {
  const auto wells = oracles::random_wells(300, oracles::kWellSeed + 1, 1e-3, 1e5);
  for (const auto& rw : wells) {
    const DimensionlessWell w(rw.g, rw.alpha);
    const Spectrum s = solve_spectrum(w);
    REQUIRE(!s.levels.empty());
    const int closed_form = static_cast<int>(std::floor(2.0 * w.sigma_max() / kPi)) + 1;
    CHECK(static_cast<int>(s.levels.size()) == closed_form);
    CHECK(static_cast<int>(s.levels.size()) == count_levels(w));
    for (std::size_t i = 0; i < s.levels.size(); ++i) {
      const EnergyLevel& level = s.levels[i];
      if (i > 0 && !(level.sigma > s.levels[i - 1].sigma)) {
        FAIL_CHECK("levels not increasing at G=" << rw.g << " alpha=" << rw.alpha);
      }
      if (level.index != static_cast<int>(i) ||
          (level.parity == Parity::Odd) != (i % 2 == 1)) {
        FAIL_CHECK("index/parity mismatch at level " << i);
      }
      const LevelResiduals r = level_residuals(w, level);
      const bool odd = level.parity == Parity::Odd;
      const auto parity = oracles::parity_residual(odd, level.sigma, level.eta);
      const auto constraint = oracles::constraint_residual(rw.g, rw.alpha, level.sigma, level.eta);
      if (!(parity < 1e-10) || !(constraint < 1e-10 * std::max(1.0, rw.g)) ||
          !(r.parity < 1e-10) || !(r.constraint < 1e-10 * std::max(1.0, rw.g))) {
        FAIL_CHECK("residual too large at G=" << rw.g << " alpha=" << rw.alpha << " level " << i);
      }
    }
  }
}

TEST_CASE("random wells agree with the scan oracle") {
  const auto wells = oracles::random_wells(100, oracles::kWellSeed + 2, 1e-3, 1e2);
  for (const auto& rw : wells) {
    const Spectrum s = solve_spectrum(DimensionlessWell(rw.g, rw.alpha));
    const auto roots = oracles::dense_scan(rw.g, rw.alpha, 1e-3);
    REQUIRE(s.levels.size() == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK((s.levels[i].parity == Parity::Odd) == roots[i].odd);
      CHECK(std::fabs(s.levels[i].sigma - static_cast<double>(roots[i].sigma)) < 1e-9);
    }
  }
}

TEST_CASE("physical wells attach energies inside (0, U)") {
  const WellParameters p(0.8, 12.0, 0.45, 1.05, 1.6);
  const Spectrum s = solve_spectrum(p);
  const Spectrum d = solve_spectrum(nondimensionalize(p));
  REQUIRE(s.levels.size() == d.levels.size());
  for (std::size_t i = 0; i < s.levels.size(); ++i) {
    REQUIRE(s.levels[i].energy);
    CHECK(*s.levels[i].energy > 0.0);
    CHECK(*s.levels[i].energy < p.depth());
    CHECK(s.levels[i].sigma == d.levels[i].sigma);
    CHECK(s.levels[i].eta == d.levels[i].eta);
    CHECK(*s.levels[i].energy == doctest::Approx(energy_of_sigma(p, s.levels[i].sigma)));
  }
}

}
