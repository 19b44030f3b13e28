#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "fqwell/core.hpp"
#include "fqwell/errors.hpp"

using namespace fqwell;

TEST_SUITE("core") {

TEST_CASE("levy index bounds") {
  CHECK_NOTHROW(LevyIndex(2.0));
  CHECK_NOTHROW(LevyIndex(1.0000001));
  CHECK_THROWS_AS(LevyIndex(1.0), ArgumentError);
  CHECK_THROWS_AS(LevyIndex(2.0000001), ArgumentError);
  CHECK_THROWS_AS(LevyIndex(std::nan("")), ArgumentError);
  try {
    LevyIndex bad(3.0);
    FAIL("accepted alpha = 3");
  } catch (const ArgumentError& e) {
    CHECK(std::string(e.what()).find("1 < alpha <= 2") != std::string::npos);
  }
}

TEST_CASE("well parameters must be positive and finite") {
  CHECK_NOTHROW(WellParameters(1.0, 16.0, 1.0, 1.0, 2.0));
  CHECK_THROWS_AS(WellParameters(0.0, 16.0, 1.0, 1.0, 2.0), ArgumentError);
  CHECK_THROWS_AS(WellParameters(1.0, -1.0, 1.0, 1.0, 2.0), ArgumentError);
  CHECK_THROWS_AS(WellParameters(1.0, 16.0, 0.0, 1.0, 2.0), ArgumentError);
  CHECK_THROWS_AS(WellParameters(1.0, 16.0, 1.0, INFINITY, 2.0), ArgumentError);
  CHECK_THROWS_AS(WellParameters(1.0, 16.0, 1.0, 1.0, 0.5), ArgumentError);
  CHECK_THROWS_AS(DimensionlessWell(0.0, 2.0), ArgumentError);
  CHECK_THROWS_AS(DimensionlessWell(INFINITY, 2.0), ArgumentError);
}

TEST_CASE("kappa of energy") {
  SUBCASE("standard limit") {
    const double m = 0.75, hbar = 1.3, u = 5.0, e = 2.0;
    const WellParameters p(1.0, u, units::standard_scale_factor(m), hbar, 2.0);
    CHECK(kappa_of_energy(p, e) == doctest::Approx(std::sqrt(2.0 * m * (u - e)) / hbar).epsilon(1e-14));
  }
  SUBCASE("zero energy") {
    const WellParameters p(1.0, 3.0, 0.7, 1.1, 1.6);
    CHECK(kappa_of_energy(p, 0.0) ==
          doctest::Approx(std::pow(3.0 / 0.7, 1.0 / 1.6) / 1.1).epsilon(1e-14));
  }
  SUBCASE("unit values") {
    const WellParameters p(1.0, 2.0, 1.0, 1.0, 1.5);
    CHECK(kappa_of_energy(p, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("energy outside [0, U)") {
    const WellParameters p(1.0, 2.0, 1.0, 1.0, 1.5);
    CHECK_THROWS_AS(kappa_of_energy(p, 2.0), DomainError);
    CHECK_THROWS_AS(kappa_of_energy(p, -0.1), DomainError);
  }
}

TEST_CASE("k of energy") {
  const double m = 2.5, hbar = 0.9;
  const WellParameters std_qm(1.0, 10.0, units::standard_scale_factor(m), hbar, 2.0);
  CHECK(k_of_energy(std_qm, 3.0) == doctest::Approx(std::sqrt(2.0 * m * 3.0) / hbar).epsilon(1e-14));
  CHECK(k_of_energy(std_qm, 0.0) == 0.0);
  const WellParameters frac(1.0, 10.0, 1.0, 1.0, 1.5);
  CHECK(k_of_energy(frac, 8.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK_THROWS_AS(k_of_energy(frac, -1.0), DomainError);
}

TEST_CASE("energy and wavenumber are inverse") {
  const WellParameters p(0.4, 7.0, 0.3, 1.7, 1.35);
  for (double e : {0.1, 1.0, 6.5}) {
    CHECK(energy_of_k(p, k_of_energy(p, e)) == doctest::Approx(e).epsilon(1e-13));
    CHECK(energy_of_kappa(p, kappa_of_energy(p, e)) == doctest::Approx(e).epsilon(1e-13));
  }
}

TEST_CASE("energy of sigma") {
  const DimensionlessWell w(16.0, 1.5);
  CHECK(energy_of_sigma(w, 0.0) == 0.0);
  CHECK(energy_of_sigma(w, w.sigma_max()) == doctest::Approx(1.0).epsilon(1e-15));

  const WellParameters p(1.0, 16.0, 0.5, 1.0, 2.0);
  const double pi = std::numbers::pi;
  CHECK(energy_of_sigma(p, pi / 2) == doctest::Approx(pi * pi / 8).epsilon(1e-15));
  const WellParameters q(1.3, 16.0, 0.8, 1.1, 1.7);
  CHECK(energy_of_sigma(q, nondimensionalize(q).sigma_max()) == doctest::Approx(16.0).epsilon(1e-14));
  CHECK_THROWS_AS(energy_of_sigma(w, -1.0), DomainError);
}

TEST_CASE("nondimensionalize") {
  const WellParameters canonical(1.0, 16.0, units::standard_scale_factor(0.5), 1.0, 2.0);
  const DimensionlessWell w = nondimensionalize(canonical);
  CHECK(w.g() == doctest::Approx(16.0).epsilon(1e-15));
  CHECK(w.sigma_max() == doctest::Approx(4.0).epsilon(1e-15));

  const double alpha = 1.7;
  const WellParameters base(1.0, 3.0, 0.6, 1.2, alpha);
  const WellParameters wider(2.0, 3.0 / std::pow(2.0, alpha), 0.6, 1.2, alpha);
  CHECK(nondimensionalize(wider).g() == doctest::Approx(nondimensionalize(base).g()).epsilon(1e-14));

  CHECK(nondimensionalize(WellParameters(1.0, 5.0, 1.0, 1.0, 1.5)).g() == doctest::Approx(5.0));

  CHECK_THROWS_AS(nondimensionalize(WellParameters(1e200, 1e200, 1e-200, 1e-200, 2.0)), OverflowError);
}

TEST_CASE("stationary phase") {
  const double hbar = 0.7;
  const double pi = std::numbers::pi;
  const auto at_rest = stationary_phase({3.0, 0.0}, hbar);
  CHECK(at_rest.real() == 1.0);
  CHECK(at_rest.imag() == 0.0);
  const auto half_turn = stationary_phase({2.0, pi * hbar / 2.0}, hbar);
  CHECK(half_turn.real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(std::fabs(half_turn.imag()) < 1e-15);
  const auto quarter = stationary_phase({1.0, pi * hbar / 2.0}, hbar);
  CHECK(std::fabs(quarter.real()) < 1e-15);
  CHECK(quarter.imag() == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("sigma max is stored exactly when given") {
  const DimensionlessWell w = DimensionlessWell::from_sigma_max(std::numbers::pi / 2, 1.8);
  CHECK(w.sigma_max() == std::numbers::pi / 2);
  CHECK(w.g() == doctest::Approx(std::pow(std::numbers::pi / 2, 1.8)));
}

}
