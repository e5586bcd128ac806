#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>

namespace lsdiv {

enum class GeneratorKind { kl, reverse_kl, squared_hellinger, total_variation, chi_squared, custom };

/// Convex generator f with f(1) = 0 defining I_f(p:q) = int p f(q/p).
///
/// Besides f itself, a generator carries its boundary behaviour, which fixes
/// the integrand where one of the densities vanishes:
///   limit_at_zero      f(0+)                 (q = 0 < p contributes p * f(0+))
///   slope_at_infinity  lim_{u->inf} f(u)/u   (p = 0 < q contributes q * slope)
///
/// weighted(log p, log q) evaluates p * f(q/p) directly from log-densities.
/// Builtins implement it without forming the ratio q/p, which under- or
/// overflows in the tails long before the product does.
class FDivGenerator {
 public:
  using Scalar = std::function<double(double)>;
  using Weighted = std::function<double(double, double)>;

  /// Custom generator. weighted defaults to p * f(exp(log q - log p)).
  FDivGenerator(std::string name, Scalar f, double limit_at_zero, double slope_at_infinity,
                Weighted weighted = {});

  const std::string& name() const noexcept { return name_; }
  GeneratorKind kind() const noexcept { return kind_; }
  double limit_at_zero() const noexcept { return limit_at_zero_; }
  double slope_at_infinity() const noexcept { return slope_at_infinity_; }

  double operator()(double u) const { return f_(u); }

  /// p * f(q/p) including the zero-density conventions, 0 when both vanish.
  double weighted(double log_p, double log_q) const;

 private:
  friend FDivGenerator builtin_generator(GeneratorKind kind);
  friend FDivGenerator adjoint(const FDivGenerator& gen);

  FDivGenerator(GeneratorKind kind, std::string name, Scalar f, double limit_at_zero,
                double slope_at_infinity, Weighted weighted);

  GeneratorKind kind_;
  std::string name_;
  Scalar f_;
  double limit_at_zero_;
  double slope_at_infinity_;
  Weighted weighted_;
};

FDivGenerator builtin_generator(GeneratorKind kind);

/// Accepts the CLI names (kl, reverse-kl, hellinger2, tv, chi2) and the long
/// names (reverse_kl, squared_hellinger, total_variation, chi_squared).
/// Throws CatalogError listing the valid names.
FDivGenerator generator_by_name(std::string_view name);

/// f*(u) = u f(1/u), so that I_{f*}(p:q) = I_f(q:p). The boundary limits swap.
FDivGenerator adjoint(const FDivGenerator& gen);

}  // namespace lsdiv
