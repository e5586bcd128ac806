#include "lsdiv/generator.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "lsdiv/errors.hpp"

namespace lsdiv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Product p*c where c may be infinite; 0*inf is taken as 0.
double times_limit(double density, double limit) {
  if (density == 0.0) return 0.0;
  return density * limit;
}

double kl_weighted(double lp, double lq) {
  const double p = std::exp(lp);
  if (p == 0.0) return 0.0;
  if (lq == -kInf) return kInf;
  return p * (lp - lq);
}

double chi2_weighted(double lp, double lq) {
  const double d = lq - lp;
  if (d > 20.0) {
    // p (q/p - 1)^2 = q^2/p (1 - p/q)^2
    const double r = -std::expm1(-d);
    return std::exp(2.0 * lq - lp) * r * r;
  }
  const double m = std::expm1(d);
  return std::exp(lp) * m * m;
}

}  // namespace

FDivGenerator::FDivGenerator(std::string name, Scalar f, double limit_at_zero,
                             double slope_at_infinity, Weighted weighted)
    : FDivGenerator(GeneratorKind::custom, std::move(name), std::move(f), limit_at_zero,
                    slope_at_infinity, std::move(weighted)) {}

FDivGenerator::FDivGenerator(GeneratorKind kind, std::string name, Scalar f, double limit_at_zero,
                             double slope_at_infinity, Weighted weighted)
    : kind_(kind),
      name_(std::move(name)),
      f_(std::move(f)),
      limit_at_zero_(limit_at_zero),
      slope_at_infinity_(slope_at_infinity),
      weighted_(std::move(weighted)) {
  if (!f_) throw InvalidArgument("generator '" + name_ + "' has no function");
  if (!weighted_) {
    weighted_ = [f = f_](double lp, double lq) {
      const double u = std::exp(lq - lp);
      return std::exp(lp) * f(u);
    };
  }
}

double FDivGenerator::weighted(double log_p, double log_q) const {
  const bool p_zero = log_p == -kInf;
  const bool q_zero = log_q == -kInf;
  if (p_zero && q_zero) return 0.0;
  if (p_zero) return times_limit(std::exp(log_q), slope_at_infinity_);
  if (q_zero) return times_limit(std::exp(log_p), limit_at_zero_);
  return weighted_(log_p, log_q);
}

FDivGenerator builtin_generator(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kl:
      return {kind, "kl", [](double u) { return -std::log(u); }, kInf, 0.0, kl_weighted};
    case GeneratorKind::reverse_kl:
      return {kind, "reverse-kl",
              [](double u) { return u == 0.0 ? 0.0 : u * std::log(u); }, 0.0, kInf,
              [](double lp, double lq) { return kl_weighted(lq, lp); }};
    case GeneratorKind::squared_hellinger:
      return {kind, "hellinger2",
              [](double u) {
                const double r = std::sqrt(u) - 1.0;
                return r * r;
              },
              1.0, 1.0,
              [](double lp, double lq) {
                const double r = std::exp(0.5 * lq) - std::exp(0.5 * lp);
                return r * r;
              }};
    case GeneratorKind::total_variation:
      return {kind, "tv", [](double u) { return 0.5 * std::fabs(u - 1.0); }, 0.5, 0.5,
              [](double lp, double lq) { return 0.5 * std::fabs(std::exp(lq) - std::exp(lp)); }};
    case GeneratorKind::chi_squared:
      return {kind, "chi2",
              [](double u) {
                const double r = u - 1.0;
                return r * r;
              },
              1.0, kInf, chi2_weighted};
    case GeneratorKind::custom: break;
  }
  throw InvalidArgument("custom generators have no builtin definition");
}

FDivGenerator generator_by_name(std::string_view name) {
  struct Alias {
    std::string_view name;
    GeneratorKind kind;
  };
  static constexpr Alias kAliases[] = {
      {"kl", GeneratorKind::kl},
      {"reverse-kl", GeneratorKind::reverse_kl},
      {"reverse_kl", GeneratorKind::reverse_kl},
      {"hellinger2", GeneratorKind::squared_hellinger},
      {"squared_hellinger", GeneratorKind::squared_hellinger},
      {"tv", GeneratorKind::total_variation},
      {"total_variation", GeneratorKind::total_variation},
      {"chi2", GeneratorKind::chi_squared},
      {"chi_squared", GeneratorKind::chi_squared},
  };
  for (const auto& alias : kAliases) {
    if (alias.name == name) return builtin_generator(alias.kind);
  }
  throw CatalogError("unknown generator '" + std::string(name) +
                     "' (valid: kl, reverse-kl, hellinger2, tv, chi2)");
}

FDivGenerator adjoint(const FDivGenerator& gen) {
  auto f = [base = gen.f_, slope = gen.slope_at_infinity_](double u) {
    if (u == 0.0) return slope;
    return u * base(1.0 / u);
  };
  // p f*(q/p) = q f(p/q)
  auto weighted = [base = gen](double lp, double lq) { return base.weighted(lq, lp); };
  return {GeneratorKind::custom, "adjoint(" + gen.name_ + ")", std::move(f),
          gen.slope_at_infinity_, gen.limit_at_zero_, std::move(weighted)};
}

}  // namespace lsdiv
