#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace lsdiv {

struct NelderMeadOptions {
  double initial_step = 0.5;
  /// Stop when every vertex lies within this max-norm distance of the best one.
  double diameter_tol = 1e-9;
  /// Alternatively stop when the objective spread falls below this, provided
  /// the simplex is also no wider than spread_diameter_guard.
  double spread_tol = 1e-12;
  double spread_diameter_guard = 1e-4;
  std::size_t max_evaluations = 2000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free minimization with the standard reflection (1), expansion
/// (2), contraction (1/2) and shrink (1/2) coefficients.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start,
                             const NelderMeadOptions& opts = {});

}  // namespace lsdiv
