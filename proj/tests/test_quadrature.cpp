#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "lsdiv/densities.hpp"
#include "lsdiv/errors.hpp"
#include "lsdiv/generator.hpp"
#include "lsdiv/quadrature.hpp"
#include "oracles.hpp"

using namespace lsdiv;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

LocationScaleDensity make(Family f, double l, double s) { return {StandardDensity(f), {l, s}}; }

}  // namespace

TEST_CASE("finite intervals") {
  const IntegralResult cubic = integrate([](double x) { return x * x * x - 2.0 * x; }, {0.0, 2.0});
  CHECK(cubic.converged);
  CHECK(cubic.value == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));

  const IntegralResult s = integrate([](double x) { return std::sin(x); }, {0.0, std::numbers::pi});
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.err_estimate < 1e-9);
  CHECK(s.evaluations >= 15);

  const IntegralResult logx = integrate([](double x) { return std::log(x); }, {0.0, 1.0});
  CHECK(logx.value == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("degenerate or reversed intervals are rejected") {
  CHECK_THROWS_AS(integrate([](double x) { return x; }, {3.0, 3.0}), InvalidArgument);
  CHECK_THROWS_AS(integrate([](double x) { return x; }, {1.0, 0.0}), InvalidArgument);
}

TEST_CASE("infinite intervals") {
  const IntegralResult e = integrate([](double x) { return std::exp(-x); }, {0.0, kInf});
  CHECK(e.value == doctest::Approx(1.0).epsilon(1e-10));

  const IntegralResult g =
      integrate([](double x) { return std::exp(-x * x); }, {-kInf, kInf});
  CHECK(g.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-10));

  const IntegralResult c =
      integrate([](double x) { return 1.0 / (1.0 + x * x); }, {-kInf, kInf});
  CHECK(c.value == doctest::Approx(std::numbers::pi).epsilon(1e-10));

  const IntegralResult left = integrate([](double x) { return std::exp(x); }, {-kInf, 0.0});
  CHECK(left.value == doctest::Approx(1.0).epsilon(1e-10));

  const std::vector<double> bps{-5.0, 0.0, 5.0};
  const IntegralResult with_bps =
      integrate([](double x) { return 1.0 / (1.0 + x * x); }, {-kInf, kInf}, {}, bps);
  CHECK(with_bps.value == doctest::Approx(std::numbers::pi).epsilon(1e-10));
}

TEST_CASE("divergent integrals are classified infinite") {
  const IntegralResult harmonic = integrate([](double x) { return 1.0 / x; }, {1.0, kInf});
  CHECK(harmonic.value == kInf);

  const IntegralResult linear =
      integrate([](double x) { return x * x / (1.0 + x * x); }, {-kInf, kInf});
  CHECK(linear.value == kInf);

  const IntegralResult with_inf = integrate([](double) { return kInf; }, {0.0, 1.0});
  CHECK(with_inf.value == kInf);

  // Slowly convergent but finite: must not be flagged.
  const IntegralResult slow = integrate([](double x) { return 1.0 / (x * x); }, {1.0, kInf});
  CHECK(slow.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("NaN integrands raise NumericFailure") {
  CHECK_THROWS_AS(
      integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); }, {0.0, 1.0}),
      NumericFailure);
}

TEST_CASE("configuration validation") {
  QuadratureConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.abs_tol = -1.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.rel_tol = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.max_depth = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.abs_tol = 0.0;
  cfg.rel_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg = {};
  CHECK_THROWS_AS(integrate([](double x) { return x; }, {0.0, std::numeric_limits<double>::quiet_NaN()}),
                  InvalidArgument);
}

TEST_CASE("density integrals against reference values") {
  const auto c01 = make(Family::cauchy, 0.0, 1.0);
  CHECK(entropy_num(c01).value == doctest::Approx(oracle::kCauchyStdEntropy).epsilon(1e-10));
  CHECK(entropy_num(make(Family::cauchy, -4.0, 2.0)).value ==
        doctest::Approx(oracle::kCauchyEntropyS2).epsilon(1e-10));
  CHECK(cross_entropy_num(c01, make(Family::cauchy, 0.0, 2.0)).value ==
        doctest::Approx(oracle::kCauchyCrossEntropy12).epsilon(1e-10));

  const FDivGenerator kl = builtin_generator(GeneratorKind::kl);
  CHECK(fdiv_num(kl, make(Family::normal, 0.0, 1.0), make(Family::normal, 1.0, 1.0)).value ==
        doctest::Approx(oracle::kGaussKL01).epsilon(1e-10));
  CHECK(fdiv_num(kl, make(Family::normal, 0.0, 1.0), c01).value ==
        doctest::Approx(oracle::kNormalCauchyKL).epsilon(1e-10));
  CHECK(fdiv_num(kl, make(Family::halfnormal, 0.0, 1.0), make(Family::exponential, 0.0, 1.0)).value ==
        doctest::Approx(oracle::kHalfNormalExpKL11).epsilon(1e-10));
}

TEST_CASE("support mismatch and heavy tails give infinity") {
  const FDivGenerator kl = builtin_generator(GeneratorKind::kl);
  const auto c01 = make(Family::cauchy, 0.0, 1.0);
  const auto n01 = make(Family::normal, 0.0, 1.0);
  CHECK(fdiv_num(kl, c01, n01).value == kInf);
  CHECK(cross_entropy_num(c01, n01).value == kInf);
  // p puts mass where q vanishes.
  CHECK(fdiv_num(kl, n01, make(Family::exponential, 0.0, 1.0)).value == kInf);
  CHECK(cross_entropy_num(make(Family::exponential, 0.0, 1.0), make(Family::exponential, 1.0, 1.0))
            .value == kInf);
  // The reverse direction is finite.
  CHECK(std::isfinite(fdiv_num(kl, make(Family::exponential, 1.0, 1.0),
                               make(Family::exponential, 0.0, 1.0))
                          .value));
}

TEST_CASE("bounded generators stay finite on disjoint-ish supports") {
  const FDivGenerator tv = builtin_generator(GeneratorKind::total_variation);
  const FDivGenerator h2 = builtin_generator(GeneratorKind::squared_hellinger);
  const auto e = make(Family::exponential, 0.0, 1.0);
  const auto n = make(Family::normal, 0.0, 1.0);
  const double tv_value = fdiv_num(tv, e, n).value;
  CHECK(tv_value > 0.0);
  CHECK(tv_value <= 1.0);
  const double h2_value = fdiv_num(h2, e, n).value;
  CHECK(h2_value > 0.0);
  CHECK(h2_value <= 2.0);
}

TEST_CASE("KL is invariant under a diffeomorphism of the sample space") {
  // log-normal densities are the image of normals under exp; KL must not change.
  const double m1 = 0.3, s1 = 0.8, m2 = -0.4, s2 = 1.3;
  auto lognormal_log_pdf = [](double y, double m, double s) {
    const double z = (std::log(y) - m) / s;
    return -0.5 * z * z - std::log(s * y) - 0.5 * std::log(2.0 * std::numbers::pi);
  };
  const IntegralResult r = integrate(
      [&](double y) {
        if (y <= 0.0) return 0.0;
        const double lp = lognormal_log_pdf(y, m1, s1);
        const double lq = lognormal_log_pdf(y, m2, s2);
        return std::exp(lp) * (lp - lq);
      },
      {0.0, kInf}, {}, std::vector<double>{0.1, 1.0, 10.0});
  const FDivGenerator kl = builtin_generator(GeneratorKind::kl);
  const double base = fdiv_num(kl, make(Family::normal, m1, s1), make(Family::normal, m2, s2)).value;
  const double exact = std::log(s2 / s1) + (s1 * s1 + (m1 - m2) * (m1 - m2)) / (2.0 * s2 * s2) - 0.5;
  CHECK(base == doctest::Approx(exact).epsilon(1e-10));
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-8));
}

TEST_CASE("breakpoints follow location and scale") {
  const auto bps = density_breakpoints(make(Family::normal, 1.0, 2.0));
  CHECK(bps.front() == doctest::Approx(-19.0));
  CHECK(bps.back() == doctest::Approx(21.0));
  const auto half = density_breakpoints(make(Family::exponential, 2.0, 0.5));
  CHECK(half.front() == 2.0);
  for (double b : half) CHECK(b >= 2.0);
}
