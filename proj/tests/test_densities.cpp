#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "doctest.h"
#include "lsdiv/densities.hpp"
#include "lsdiv/errors.hpp"
#include "lsdiv/quadrature.hpp"
#include "oracles.hpp"

using namespace lsdiv;

TEST_CASE("standard densities at known points") {
  const double pi = std::numbers::pi;
  CHECK(StandardDensity(Family::cauchy).pdf(0.0) == doctest::Approx(1.0 / pi));
  CHECK(StandardDensity(Family::cauchy).pdf(1.0) == doctest::Approx(0.5 / pi));
  CHECK(StandardDensity(Family::normal).pdf(0.0) == doctest::Approx(1.0 / std::sqrt(2.0 * pi)));
  CHECK(StandardDensity(Family::halfnormal).pdf(0.0) == doctest::Approx(oracle::kSqrt2OverPi));
  CHECK(StandardDensity(Family::halfnormal).pdf(-0.1) == 0.0);
  CHECK(StandardDensity(Family::exponential).pdf(0.0) == 1.0);
  CHECK(StandardDensity(Family::exponential).pdf(-1e-12) == 0.0);
  CHECK(StandardDensity(Family::laplace).pdf(0.0) == 0.5);
}

TEST_CASE("log_pdf agrees with pdf and is -inf off the support") {
  const double inf = std::numeric_limits<double>::infinity();
  for (Family f : kAllFamilies) {
    const StandardDensity d(f);
    for (double x : {0.0, 0.3, 1.0, 2.5, 7.0}) {
      CHECK(d.log_pdf(x) == doctest::Approx(std::log(d.pdf(x))).epsilon(1e-13));
    }
    if (!d.on_real_line()) {
      CHECK(d.log_pdf(-1.0) == -inf);
      CHECK(d.support_lower() == 0.0);
    } else {
      CHECK(d.support_lower() == -inf);
    }
  }
}

TEST_CASE("cauchy log density stays finite far in the tail") {
  const StandardDensity c(Family::cauchy);
  const double lp = c.log_pdf(1e200);
  CHECK(std::isfinite(lp));
  CHECK(lp == doctest::Approx(-std::log(std::numbers::pi) - 400.0 * std::log(10.0)));
}

TEST_CASE("evenness flags match the densities") {
  for (Family f : kAllFamilies) {
    const StandardDensity d(f);
    if (!d.is_even()) continue;
    for (double x : {0.1, 0.9, 3.3, 12.0}) CHECK(d.pdf(x) == d.pdf(-x));
  }
  CHECK(StandardDensity(Family::cauchy).is_even());
  CHECK(StandardDensity(Family::normal).is_even());
  CHECK(StandardDensity(Family::laplace).is_even());
  CHECK_FALSE(StandardDensity(Family::halfnormal).is_even());
  CHECK_FALSE(StandardDensity(Family::exponential).is_even());
}

TEST_CASE("location-scale densities integrate to one") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> loc(-3.0, 3.0);
  std::uniform_real_distribution<double> log_scale(-1.5, 1.5);
  for (Family f : kAllFamilies) {
    for (int i = 0; i < 5; ++i) {
      const LocationScaleDensity d(StandardDensity(f), {loc(rng), std::exp(log_scale(rng))});
      const auto bps = density_breakpoints(d);
      const IntegralResult r = integrate([&](double x) { return d.pdf(x); },
                                         {d.support_lower(), std::numeric_limits<double>::infinity()},
                                         {}, bps);
      CAPTURE(family_name(f));
      CHECK(r.converged);
      CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("wrapper applies the Jacobian") {
  const LocationScaleDensity d(StandardDensity(Family::normal), {2.0, 3.0});
  const StandardDensity s(Family::normal);
  CHECK(d.pdf(5.0) == doctest::Approx(s.pdf(1.0) / 3.0));
  CHECK(d.log_pdf(5.0) == doctest::Approx(s.log_pdf(1.0) - std::log(3.0)));
  const LocationScaleDensity e(StandardDensity(Family::exponential), {1.0, 2.0});
  CHECK(e.support_lower() == 1.0);
  CHECK(e.pdf(0.99) == 0.0);
  CHECK(e.with({0.0, 1.0}).pdf(0.99) > 0.0);
}

TEST_CASE("catalog lookup") {
  CHECK(catalog("cauchy").family() == Family::cauchy);
  CHECK(catalog("halfnormal").family() == Family::halfnormal);
  CHECK_THROWS_AS(catalog("gumbel"), CatalogError);
  try {
    catalog("gumbel");
  } catch (const CatalogError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("gumbel") != std::string::npos);
    CHECK(msg.find("laplace") != std::string::npos);
  }
  for (Family f : kAllFamilies) CHECK(catalog(family_name(f)).family() == f);
}

TEST_CASE("closed-form entropy exists only where known") {
  CHECK(StandardDensity(Family::cauchy).standard_entropy().value() ==
        doctest::Approx(oracle::kCauchyStdEntropy));
  const LocationScaleDensity c2(StandardDensity(Family::cauchy), {5.0, 2.0});
  CHECK(entropy_closed(c2).value() == doctest::Approx(oracle::kCauchyEntropyS2));
  CHECK_FALSE(entropy_closed(LocationScaleDensity(StandardDensity(Family::normal), {0.0, 1.0})));
}

TEST_CASE("density spec parsing") {
  const LocationScaleDensity d = parse_density_spec("laplace:-1.5,2e-1");
  CHECK(d.standard().family() == Family::laplace);
  CHECK(d.location() == -1.5);
  CHECK(d.scale() == 0.2);
  CHECK(parse_density_spec("normal:+1,+2").location() == 1.0);

  CHECK_THROWS_AS(parse_density_spec("normal"), InvalidArgument);
  CHECK_THROWS_AS(parse_density_spec("normal:0"), InvalidArgument);
  CHECK_THROWS_AS(parse_density_spec("normal:a,1"), InvalidArgument);
  CHECK_THROWS_AS(parse_density_spec("normal:0,1x"), InvalidArgument);
  CHECK_THROWS_AS(parse_density_spec("normal:0,-1"), InvalidArgument);
  CHECK_THROWS_AS(parse_density_spec("normal:0,0"), InvalidArgument);
  CHECK_THROWS_AS(parse_density_spec("normal:nan,1"), InvalidArgument);
  CHECK_THROWS_AS(parse_density_spec("weibull:0,1"), CatalogError);
}
