#pragma once

#include <optional>
#include <string_view>

#include "lsdiv/densities.hpp"
#include "lsdiv/generator.hpp"
#include "lsdiv/group.hpp"
#include "lsdiv/quadrature.hpp"

namespace lsdiv {

enum class Method { closed_form, quadrature };

std::string_view method_name(Method m) noexcept;

/// Quadrature value computed alongside a closed form on request.
struct Verification {
  double quadrature_value;
  double quadrature_error;
  double abs_difference;
  bool agrees;  // abs_difference <= kVerifyTolerance (or both infinite)
};

inline constexpr double kVerifyTolerance = 1e-6;

/// Finite results in [-kClampBand, 0) are reported as 0 for divergences.
inline constexpr double kClampBand = 1e-9;

struct DivergenceResult {
  double value = 0.0;
  Method method = Method::quadrature;
  double err_estimate = 0.0;
  bool converged = true;
  /// Value before clamping quadrature noise.
  double raw_value = 0.0;
  bool clamped = false;
  std::optional<Verification> verification;
};

/// Parameters of q in I_f(p : q_{l,s}) equivalent to I_f(p_{e1} : q_{e2}):
/// ((l2 - l1)/s1, s2/s1) = inverse(e1) . e2
GroupElement reduce_right(const GroupElement& e1, const GroupElement& e2);

/// Parameters of p in I_f(p_{l,s} : q) equivalent to I_f(p_{e1} : q_{e2}):
/// ((l1 - l2)/s2, s1/s2) = inverse(e2) . e1
GroupElement reduce_left(const GroupElement& e1, const GroupElement& e2);

/// Registry lookup: (cauchy, cauchy, kl) and (halfnormal, exponential, kl) at equal locations.
std::optional<double> closed_form_fdiv(const FDivGenerator& gen, const LocationScaleDensity& p,
                                       const LocationScaleDensity& q);

/// Registry lookup: Cauchy scale densities sharing a location.
std::optional<double> closed_form_cross_entropy(const LocationScaleDensity& p,
                                                const LocationScaleDensity& q);

/// I_f(p : q). Uses the closed-form registry when it covers the case,
/// otherwise integrates the right-reduced pair (p standard, q transformed).
DivergenceResult fdiv(const FDivGenerator& gen, const LocationScaleDensity& p,
                      const LocationScaleDensity& q, const QuadratureConfig& cfg = {},
                      bool verify = false);

DivergenceResult kl(const LocationScaleDensity& p, const LocationScaleDensity& q,
                    const QuadratureConfig& cfg = {}, bool verify = false);

/// h^x(p : q). Numeric route: h^x(p : q_{reduce_right}) + log s1.
DivergenceResult cross_entropy(const LocationScaleDensity& p, const LocationScaleDensity& q,
                               const QuadratureConfig& cfg = {}, bool verify = false);

/// h(p_{l,s}) = h(p) + log s, closed form when the standard entropy is known.
DivergenceResult entropy(const LocationScaleDensity& p, const QuadratureConfig& cfg = {},
                         bool verify = false);

}  // namespace lsdiv
