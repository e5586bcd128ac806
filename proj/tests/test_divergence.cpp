#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "doctest.h"
#include "lsdiv/closed_forms.hpp"
#include "lsdiv/divergence.hpp"
#include "lsdiv/errors.hpp"
#include "lsdiv/generator.hpp"
#include "oracles.hpp"

using namespace lsdiv;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

LocationScaleDensity make(Family f, double l, double s) { return {StandardDensity(f), {l, s}}; }

}  // namespace

TEST_CASE("log integral A") {
  CHECK(log_integral_A(1.0, 1.0) == doctest::Approx(oracle::kA11).epsilon(1e-14));
  CHECK(log_integral_A(1.0, 2.0) == doctest::Approx(oracle::kA12).epsilon(1e-14));
  CHECK(log_integral_A(3.0, 1.0) == doctest::Approx(oracle::kA31).epsilon(1e-14));
  CHECK_THROWS_AS(log_integral_A(0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(log_integral_A(1.0, -2.0), InvalidArgument);
}

TEST_CASE("Cauchy closed forms") {
  CHECK(cauchy_scale_kl(1.0, 2.0) == doctest::Approx(oracle::kCauchyScaleKL12).epsilon(1e-14));
  CHECK(cauchy_scale_kl(3.0, 3.0) == 0.0);
  CHECK(cauchy_scale_kl(1.0, 2.0) == cauchy_scale_kl(2.0, 1.0));
  CHECK(cauchy_scale_cross_entropy(1.0, 2.0) ==
        doctest::Approx(oracle::kCauchyCrossEntropy12).epsilon(1e-14));
  CHECK(cauchy_scale_cross_entropy(1.0, 1.0) == doctest::Approx(oracle::kCauchyStdEntropy));
  CHECK(cauchy_kl({0.0, 1.0}, {1.0, 1.0}) == doctest::Approx(oracle::kLog125).epsilon(1e-14));
  CHECK(cauchy_kl({0.0, 1.0}, {0.0, 2.0}) == doctest::Approx(oracle::kCauchyScaleKL12));
  CHECK_THROWS_AS(cauchy_scale_kl(-1.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(cauchy_scale_cross_entropy(1.0, 0.0), InvalidArgument);
}

TEST_CASE("Cauchy scale KL is twice the log AM/GM ratio") {
  for (double s1 : {0.3, 1.0, 2.5})
    for (double s2 : {0.7, 4.0}) {
      const double am = 0.5 * (s1 + s2), gm = std::sqrt(s1 * s2);
      CHECK(cauchy_scale_kl(s1, s2) == doctest::Approx(2.0 * std::log(am / gm)).epsilon(1e-14));
      CHECK(cauchy_scale_kl(s1, s2) >= 0.0);
    }
}

TEST_CASE("half-normal to exponential closed form") {
  CHECK(halfnormal_exp_kl(1.0, 1.0) == doctest::Approx(oracle::kHalfNormalExpKL11).epsilon(1e-13));
  CHECK(halfnormal_exp_kl(std::sqrt(std::numbers::pi / 2.0), 1.0) ==
        doctest::Approx(oracle::kHalfNormalExpMin).epsilon(1e-13));
  CHECK(halfnormal_exp_kl(1.0, oracle::kSqrt2OverPi) ==
        doctest::Approx(oracle::kHalfNormalExpMin).epsilon(1e-12));
  CHECK_THROWS_AS(halfnormal_exp_kl(0.0, 1.0), InvalidArgument);
}

TEST_CASE("reductions") {
  const GroupElement e1{1.0, 2.0}, e2{3.0, 4.0};
  const GroupElement r = reduce_right(e1, e2);
  CHECK(r.location() == 1.0);
  CHECK(r.scale() == 2.0);
  const GroupElement l = reduce_left(e1, e2);
  CHECK(l.location() == -0.5);
  CHECK(l.scale() == 0.5);
  CHECK(reduce_right(e1, e2) == compose(inverse(e1), e2));
  CHECK(reduce_left(e1, e2) == compose(inverse(e2), e1));
}

TEST_CASE("dispatch picks closed forms where registered") {
  const auto c1 = make(Family::cauchy, 0.5, 1.0);
  const auto c2 = make(Family::cauchy, -1.0, 3.0);
  const DivergenceResult k = kl(c1, c2);
  CHECK(k.method == Method::closed_form);
  CHECK(k.value == doctest::Approx(cauchy_kl(c1.element(), c2.element())));
  CHECK_FALSE(k.verification.has_value());

  CHECK(entropy(c2).method == Method::closed_form);
  CHECK(cross_entropy(make(Family::cauchy, 2.0, 1.0), make(Family::cauchy, 2.0, 2.0)).method ==
        Method::closed_form);
  // Different locations: no cross-entropy closed form.
  CHECK(cross_entropy(c1, c2).method == Method::quadrature);
  CHECK(kl(make(Family::halfnormal, 0.0, 1.0), make(Family::exponential, 0.0, 2.0)).method ==
        Method::closed_form);
  CHECK(kl(make(Family::halfnormal, 0.0, 1.0), make(Family::exponential, 0.5, 2.0)).method ==
        Method::quadrature);
  CHECK(kl(make(Family::normal, 0.0, 1.0), make(Family::normal, 1.0, 1.0)).method ==
        Method::quadrature);
  CHECK_FALSE(closed_form_fdiv(builtin_generator(GeneratorKind::total_variation), c1, c2));
  CHECK(method_name(Method::closed_form) == "closed_form");
  CHECK(method_name(Method::quadrature) == "quadrature");
}

TEST_CASE("verification mode attaches the quadrature check") {
  const DivergenceResult r = kl(make(Family::cauchy, 0.0, 1.0), make(Family::cauchy, 1.0, 1.0), {}, true);
  REQUIRE(r.verification.has_value());
  CHECK(r.verification->agrees);
  CHECK(r.verification->abs_difference < 1e-8);
  CHECK(r.value == doctest::Approx(oracle::kLog125).epsilon(1e-14));

  const DivergenceResult h = entropy(make(Family::cauchy, 0.0, 2.0), {}, true);
  REQUIRE(h.verification.has_value());
  CHECK(h.verification->quadrature_value == doctest::Approx(oracle::kCauchyEntropyS2).epsilon(1e-9));
}

TEST_CASE("quadrature results against reference values") {
  const DivergenceResult g = kl(make(Family::normal, 0.0, 1.0), make(Family::normal, 1.0, 1.0));
  CHECK(g.value == doctest::Approx(oracle::kGaussKL01).epsilon(1e-9));
  CHECK(g.converged);
  CHECK(kl(make(Family::normal, 0.0, 1.0), make(Family::cauchy, 0.0, 1.0)).value ==
        doctest::Approx(oracle::kNormalCauchyKL).epsilon(1e-9));
  CHECK(kl(make(Family::cauchy, 0.0, 1.0), make(Family::normal, 0.0, 1.0)).value == kInf);
}

TEST_CASE("identical densities give zero") {
  for (Family f : kAllFamilies) {
    const auto p = make(f, 0.7, 1.9);
    for (GeneratorKind k : {GeneratorKind::kl, GeneratorKind::squared_hellinger,
                            GeneratorKind::total_variation, GeneratorKind::chi_squared}) {
      const DivergenceResult r = fdiv(builtin_generator(k), p, p);
      CHECK(r.value >= 0.0);
      CHECK(r.value < 1e-9);
    }
  }
}

TEST_CASE("tiny negative noise is clamped and recorded") {
  // A custom generator that is negative by 1e-12 per unit mass yields a small negative integral.
  const FDivGenerator shifted("shifted", [](double u) { return 0.5 * std::fabs(u - 1.0) - 1e-12; },
                              0.5 - 1e-12, 0.5);
  const auto p = make(Family::normal, 0.0, 1.0);
  const DivergenceResult r = fdiv(shifted, p, p);
  CHECK(r.value == 0.0);
  CHECK(r.clamped);
  CHECK(r.raw_value < 0.0);
  CHECK(r.raw_value > -kClampBand);
}

TEST_CASE("KL decomposes as cross-entropy minus entropy") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> loc(-2.0, 2.0);
  std::uniform_real_distribution<double> log_scale(-1.0, 1.0);
  const Family finite_pairs[][2] = {{Family::normal, Family::normal},
                                    {Family::normal, Family::cauchy},
                                    {Family::laplace, Family::cauchy},
                                    {Family::normal, Family::laplace},
                                    {Family::cauchy, Family::cauchy}};
  for (const auto& pair : finite_pairs) {
    for (int i = 0; i < 4; ++i) {
      const auto p = make(pair[0], loc(rng), std::exp(log_scale(rng)));
      const auto q = make(pair[1], loc(rng), std::exp(log_scale(rng)));
      const double k = kl(p, q).value;
      const double ce = cross_entropy(p, q).value;
      const double h = entropy(p).value;
      CHECK(std::fabs(k - (ce - h)) <= 2e-8);
    }
  }
}

TEST_CASE("entropy transforms with the scale") {
  for (Family f : kAllFamilies) {
    const double h1 = entropy(make(f, 0.0, 1.0)).value;
    const double h3 = entropy(make(f, -2.0, 3.0)).value;
    CHECK(h3 == doctest::Approx(h1 + std::log(3.0)).epsilon(1e-9));
  }
  // Normal: (1/2) log(2 pi e).
  CHECK(entropy(make(Family::normal, 0.0, 1.0)).value ==
        doctest::Approx(0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e)).epsilon(1e-10));
  CHECK(entropy(make(Family::exponential, 0.0, 1.0)).value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(entropy(make(Family::laplace, 0.0, 1.0)).value ==
        doctest::Approx(1.0 + std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("support mismatch is infinite for KL but not for TV") {
  const auto p = make(Family::exponential, 0.0, 1.0);
  const auto q = make(Family::exponential, 1.0, 1.0);
  CHECK(kl(p, q).value == kInf);
  CHECK(cross_entropy(p, q).value == kInf);
  const double tv = fdiv(builtin_generator(GeneratorKind::total_variation), p, q).value;
  CHECK(tv == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-9));
}
