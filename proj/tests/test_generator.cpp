#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "lsdiv/densities.hpp"
#include "lsdiv/errors.hpp"
#include "lsdiv/generator.hpp"
#include "lsdiv/quadrature.hpp"

using namespace lsdiv;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr GeneratorKind kBuiltins[] = {GeneratorKind::kl, GeneratorKind::reverse_kl,
                                       GeneratorKind::squared_hellinger,
                                       GeneratorKind::total_variation, GeneratorKind::chi_squared};

}  // namespace

TEST_CASE("builtin generators vanish at one and are convex") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 20.0);
  std::uniform_real_distribution<double> t(0.0, 1.0);
  for (GeneratorKind k : kBuiltins) {
    const FDivGenerator f = builtin_generator(k);
    CAPTURE(f.name());
    CHECK(f(1.0) == doctest::Approx(0.0).scale(1.0));
    CHECK(f.kind() == k);
    for (int i = 0; i < 200; ++i) {
      const double a = u(rng), b = u(rng), w = t(rng);
      CHECK(f(w * a + (1.0 - w) * b) <= w * f(a) + (1.0 - w) * f(b) + 1e-12);
    }
  }
}

TEST_CASE("generator limits") {
  CHECK(builtin_generator(GeneratorKind::kl).limit_at_zero() == kInf);
  CHECK(builtin_generator(GeneratorKind::kl).slope_at_infinity() == 0.0);
  CHECK(builtin_generator(GeneratorKind::reverse_kl).limit_at_zero() == 0.0);
  CHECK(builtin_generator(GeneratorKind::reverse_kl).slope_at_infinity() == kInf);
  CHECK(builtin_generator(GeneratorKind::total_variation).limit_at_zero() == 0.5);
  CHECK(builtin_generator(GeneratorKind::squared_hellinger).slope_at_infinity() == 1.0);
  CHECK(builtin_generator(GeneratorKind::chi_squared).slope_at_infinity() == kInf);
}

TEST_CASE("weighted form equals p f(q/p)") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> lg(-6.0, 2.0);
  for (GeneratorKind k : kBuiltins) {
    const FDivGenerator f = builtin_generator(k);
    for (int i = 0; i < 100; ++i) {
      const double lp = lg(rng), lq = lg(rng);
      const double p = std::exp(lp), q = std::exp(lq);
      CAPTURE(f.name());
      CHECK(f.weighted(lp, lq) == doctest::Approx(p * f(q / p)).epsilon(1e-10).scale(1e-300));
    }
  }
}

TEST_CASE("weighted form at zero densities") {
  const FDivGenerator kl = builtin_generator(GeneratorKind::kl);
  CHECK(kl.weighted(-kInf, -kInf) == 0.0);
  CHECK(kl.weighted(-kInf, 0.0) == 0.0);
  CHECK(kl.weighted(0.0, -kInf) == kInf);
  const FDivGenerator tv = builtin_generator(GeneratorKind::total_variation);
  CHECK(tv.weighted(0.0, -kInf) == doctest::Approx(0.5));
  CHECK(tv.weighted(-kInf, std::log(0.4)) == doctest::Approx(0.2));
  const FDivGenerator chi2 = builtin_generator(GeneratorKind::chi_squared);
  CHECK(chi2.weighted(-kInf, 0.0) == kInf);
  // Huge likelihood ratios stay finite instead of overflowing to NaN.
  CHECK(std::isfinite(chi2.weighted(-700.0, 0.0)));
}

TEST_CASE("lookup by name") {
  CHECK(generator_by_name("kl").kind() == GeneratorKind::kl);
  CHECK(generator_by_name("reverse-kl").kind() == GeneratorKind::reverse_kl);
  CHECK(generator_by_name("hellinger2").kind() == GeneratorKind::squared_hellinger);
  CHECK(generator_by_name("squared_hellinger").kind() == GeneratorKind::squared_hellinger);
  CHECK(generator_by_name("tv").kind() == GeneratorKind::total_variation);
  CHECK(generator_by_name("chi2").kind() == GeneratorKind::chi_squared);
  CHECK_THROWS_AS(generator_by_name("js"), CatalogError);
  CHECK_THROWS_AS(builtin_generator(GeneratorKind::custom), InvalidArgument);
}

TEST_CASE("adjoint") {
  const FDivGenerator kl = builtin_generator(GeneratorKind::kl);
  const FDivGenerator star = adjoint(kl);
  CHECK(star.name() == "adjoint(kl)");
  CHECK(star.kind() == GeneratorKind::custom);
  CHECK(star.limit_at_zero() == kl.slope_at_infinity());
  CHECK(star.slope_at_infinity() == kl.limit_at_zero());
  CHECK(star(0.0) == 0.0);
  for (double u : {0.1, 0.5, 2.0, 7.0}) {
    CHECK(star(u) == doctest::Approx(u * std::log(u)));
    CHECK(star.weighted(std::log(0.3), std::log(u)) ==
          doctest::Approx(kl.weighted(std::log(u), std::log(0.3))));
  }
}

TEST_CASE("adjoint is an involution") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.05, 15.0);
  for (GeneratorKind k : kBuiltins) {
    const FDivGenerator f = builtin_generator(k);
    const FDivGenerator ff = adjoint(adjoint(f));
    CAPTURE(f.name());
    CHECK(ff.limit_at_zero() == f.limit_at_zero());
    CHECK(ff.slope_at_infinity() == f.slope_at_infinity());
    for (int i = 0; i < 50; ++i) {
      const double x = u(rng);
      CHECK(ff(x) == doctest::Approx(f(x)).epsilon(1e-12).scale(1.0));
      const double lp = std::log(u(rng)), lq = std::log(u(rng));
      CHECK(ff.weighted(lp, lq) == doctest::Approx(f.weighted(lp, lq)).epsilon(1e-12));
    }
  }
}

TEST_CASE("total variation is self-adjoint") {
  const FDivGenerator tv = builtin_generator(GeneratorKind::total_variation);
  const FDivGenerator star = adjoint(tv);
  for (double u : {0.0, 0.2, 1.0, 3.0}) CHECK(star(u) == doctest::Approx(tv(u)).scale(1.0));
}

TEST_CASE("custom generator from a scalar function") {
  // Pearson-Vajda type f(u) = (u-1)^2 / 2 equals half chi-squared.
  const FDivGenerator half_chi2("half-chi2", [](double u) { return 0.5 * (u - 1.0) * (u - 1.0); },
                                0.5, kInf);
  CHECK(half_chi2.kind() == GeneratorKind::custom);
  const LocationScaleDensity p(StandardDensity(Family::normal), {0.0, 1.0});
  const LocationScaleDensity q(StandardDensity(Family::normal), {0.5, 1.0});
  const double a = fdiv_num(half_chi2, p, q).value;
  const double b = fdiv_num(builtin_generator(GeneratorKind::chi_squared), p, q).value;
  CHECK(a == doctest::Approx(0.5 * b).epsilon(1e-9));
  CHECK(b == doctest::Approx(std::expm1(0.25)).epsilon(1e-9));
}
