#pragma once

#include <cstddef>

#include "lsdiv/densities.hpp"
#include "lsdiv/generator.hpp"
#include "lsdiv/group.hpp"
#include "lsdiv/quadrature.hpp"

namespace lsdiv {

enum class Side { left, right };

/// Objective values of +inf are replaced by this inside the simplex.
inline constexpr double kInfeasiblePenalty = 1e9;

struct ProjectionResult {
  /// (l*, s*) minimizing I_f(p : q_{l,s}) for the standard densities.
  GroupElement reduced_optimum{0.0, 1.0};
  /// Reconstructed optimum in the family being searched.
  GroupElement target_optimum{0.0, 1.0};
  double min_value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
  std::size_t starts_used = 0;
  /// Location was held at 0 in the reduced problem (half-line families).
  bool location_pinned = false;
};

/// min over (l2, s2) of I_f(query : q_{l2,s2}) with q the target's standard
/// density. Solved in reduced form, then l2* = s1 l* + l1 and s2* = s* s1.
ProjectionResult project_right(const LocationScaleDensity& query, const StandardDensity& target,
                               const FDivGenerator& gen, const QuadratureConfig& cfg = {});

/// min over (l1, s1) of I_f(p_{l1,s1} : query) with p the source's standard
/// density. Reconstruction: s1* = s2 / s*, l1* = l2 - l* s1*.
ProjectionResult project_left(const LocationScaleDensity& query, const StandardDensity& source,
                              const FDivGenerator& gen, const QuadratureConfig& cfg = {});

struct FamilyMinResult {
  /// min of the two single-sided minima; +inf when both are infeasible.
  double value = 0.0;
  /// project_right(p standard -> Q)
  ProjectionResult right;
  /// project_left(q standard <- P)
  ProjectionResult left;
  bool right_infinite = false;
  bool left_infinite = false;
};

/// I_f(P:Q), the smallest divergence between any member of P and any member of Q.
FamilyMinResult family_min(const StandardDensity& p, const StandardDensity& q,
                           const FDivGenerator& gen, const QuadratureConfig& cfg = {});

}  // namespace lsdiv
