#pragma once

#include "lsdiv/group.hpp"

namespace lsdiv {

/// KL between Cauchy densities with arbitrary location and scale:
/// log(((s1 + s2)^2 + (l1 - l2)^2) / (4 s1 s2)). Symmetric in its arguments.
double cauchy_kl(const GroupElement& e1, const GroupElement& e2) noexcept;

/// Cross-entropy between Cauchy scale densities, log(pi (s1 + s2)^2 / s2).
double cauchy_scale_cross_entropy(double s1, double s2);

/// 2 log(A/G) with A, G the arithmetic and geometric means of the scales.
double cauchy_scale_kl(double s1, double s2);

/// KL(halfnormal_{s1} : exponential_{s2}) for scale densities anchored at the
/// same location. Depends on s1/s2 only; minimized at s1/s2 = sqrt(pi/2).
double halfnormal_exp_kl(double s1, double s2);

/// int_R log(a^2 + x^2) / (b^2 + x^2) dx = (2 pi / b) log(a + b).
double log_integral_A(double a, double b);

}  // namespace lsdiv
