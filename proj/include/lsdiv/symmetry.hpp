#pragma once

#include "lsdiv/densities.hpp"
#include "lsdiv/generator.hpp"
#include "lsdiv/quadrature.hpp"

namespace lsdiv {

/// int p(x) log(p(x + l) / p(x - l)) dx. Zero for every l exactly when the KL
/// divergence of the location family through p is symmetric. Requires a
/// real-line standard density; l = 0 returns exactly 0.
IntegralResult location_symmetry_defect(const StandardDensity& p, double l,
                                        const QuadratureConfig& cfg = {});

/// int p(x) log(p(x/s) / p(s x)) dx - 2 log s. Zero for every s exactly when
/// the KL divergence of the scale family through p is symmetric. s = 1
/// returns exactly 0.
IntegralResult scale_symmetry_defect(const StandardDensity& p, double s,
                                     const QuadratureConfig& cfg = {});

struct SymmetryDefect {
  /// I_f(p:q) - I_f(q:p); meaningless when !comparable.
  double value = 0.0;
  double err_estimate = 0.0;
  bool converged = true;
  /// False when either direction is +inf; symmetry is then a support or
  /// integrability statement, not a number.
  bool comparable = true;
  double forward = 0.0;   // I_f(p:q)
  double backward = 0.0;  // I_f(q:p)
};

/// int (p f(q/p) - q f(p/q)) dx, integrated as a single difference.
SymmetryDefect fdiv_symmetry_defect(const FDivGenerator& gen, const LocationScaleDensity& p,
                                    const LocationScaleDensity& q,
                                    const QuadratureConfig& cfg = {});

}  // namespace lsdiv
