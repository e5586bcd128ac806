#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "lsdiv/densities.hpp"
#include "lsdiv/generator.hpp"

namespace lsdiv {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  /// Maximum bisection depth of any single segment.
  int max_depth = 50;
  /// Any estimate beyond this magnitude is classified as divergent.
  double divergence_cap = 1e8;
  /// Truncation offsets (measured from the tail's anchor) used to probe an
  /// infinite range that failed to converge.
  std::vector<double> truncation_schedule{1e2, 1e3, 1e4, 1e6};
  /// Hard limit on the number of live segments across all pieces.
  std::size_t max_segments = 4000;

  /// Throws InvalidArgument on negative tolerances, a non-increasing
  /// schedule, or non-positive limits.
  void validate() const;
};

struct IntegralResult {
  /// Finite, or +-inf when the integral was classified divergent.
  double value = 0.0;
  double err_estimate = 0.0;
  /// For infinite values this reports the divergence classification.
  bool converged = false;
  std::size_t evaluations = 0;
};

using Integrand = std::function<double(double)>;

struct Interval {
  double lower;
  double upper;
};

/// Adaptive 15-point Gauss-Kronrod integration with global bisection.
///
/// Either bound may be infinite. Breakpoints strictly inside the interval
/// split it into pieces (use them at kinks, support edges and modes). Half-
/// infinite pieces are mapped to (0, 1) by x = a + w t/(1-t); the doubly
/// infinite range without breakpoints is mapped by x = tan(theta). Nodes never
/// touch piece endpoints.
///
/// A +inf integrand value at any node makes the result +inf. A NaN integrand
/// throws NumericFailure.
IntegralResult integrate(const Integrand& f, Interval interval, const QuadratureConfig& cfg = {},
                         std::span<const double> breakpoints = {});

/// Natural split points for a density: its location, support edge and a few
/// scale multiples on each side.
std::vector<double> density_breakpoints(const LocationScaleDensity& d);

/// -int p log q over supp(p), with 0 log 0 = 0 and +inf when p puts mass where q vanishes.
IntegralResult cross_entropy_num(const LocationScaleDensity& p, const LocationScaleDensity& q,
                                 const QuadratureConfig& cfg = {});

IntegralResult entropy_num(const LocationScaleDensity& p, const QuadratureConfig& cfg = {});

/// int p f(q/p) over supp(p) U supp(q), using the generator's boundary limits.
IntegralResult fdiv_num(const FDivGenerator& gen, const LocationScaleDensity& p,
                        const LocationScaleDensity& q, const QuadratureConfig& cfg = {});

}  // namespace lsdiv
