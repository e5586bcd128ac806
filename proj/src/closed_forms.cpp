#include "lsdiv/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lsdiv/errors.hpp"

namespace lsdiv {
namespace {

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw InvalidArgument(std::string(what) + " must be finite and > 0");
  }
}

}  // namespace

double cauchy_kl(const GroupElement& e1, const GroupElement& e2) noexcept {
  const double s1 = e1.scale();
  const double s2 = e2.scale();
  const double dl = e1.location() - e2.location();
  const double sum = s1 + s2;
  return std::log((sum * sum + dl * dl) / (4.0 * s1 * s2));
}

double cauchy_scale_cross_entropy(double s1, double s2) {
  require_positive(s1, "s1");
  require_positive(s2, "s2");
  const double sum = s1 + s2;
  return std::log(std::numbers::pi * sum * sum / s2);
}

double cauchy_scale_kl(double s1, double s2) {
  require_positive(s1, "s1");
  require_positive(s2, "s2");
  const double arithmetic = 0.5 * (s1 + s2);
  const double geometric = std::sqrt(s1 * s2);
  return 2.0 * std::log(arithmetic / geometric);
}

double halfnormal_exp_kl(double s1, double s2) {
  require_positive(s1, "s1");
  require_positive(s2, "s2");
  const double two_over_pi = 2.0 / std::numbers::pi;
  return 0.5 * (2.0 * std::log(s2 / s1) + std::log(two_over_pi) - 1.0) +
         std::sqrt(two_over_pi) * (s1 / s2);
}

double log_integral_A(double a, double b) {
  require_positive(a, "a");
  require_positive(b, "b");
  return 2.0 * std::numbers::pi / b * std::log(a + b);
}

}  // namespace lsdiv
