#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lsdiv/quadrature.hpp"

namespace lsdiv {

enum class Suite { identities, symmetry, closed_forms, projection, all };

/// identities | symmetry | closed-forms | projection | all
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s) noexcept;

/// One verified property: the worst defect over its trials against a tolerance.
struct CheckItem {
  std::string suite;
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Trials where both sides were +inf (agreement, but no numeric defect).
  std::size_t infinite = 0;
  double max_defect = 0.0;
  double tolerance = 0.0;

  bool passed() const noexcept { return failures == 0; }
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool passed() const noexcept;
};

/// Runs the randomized verification batteries. Parameters are drawn from a
/// 64-bit generator seeded per check from `seed`, with l uniform in [-3, 3]
/// and log s uniform in [-1.5, 1.5]; identical arguments give identical reports.
CheckReport run_checks(Suite suite, std::size_t trials, std::uint64_t seed,
                       const QuadratureConfig& cfg = {});

}  // namespace lsdiv
