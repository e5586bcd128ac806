#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "lsdiv/group.hpp"

namespace lsdiv {

enum class Family { cauchy, normal, halfnormal, exponential, laplace };

inline constexpr std::array<Family, 5> kAllFamilies = {
    Family::cauchy, Family::normal, Family::halfnormal, Family::exponential, Family::laplace};

std::string_view family_name(Family f) noexcept;

/// Standard (reduced) density of a catalog family, i.e. the member at (0, 1).
///
/// Support is either the real line or the half-line [0, inf). Outside the
/// support pdf is 0 and log_pdf is -inf.
class StandardDensity {
 public:
  explicit StandardDensity(Family family) noexcept : family_(family) {}

  Family family() const noexcept { return family_; }
  std::string_view name() const noexcept { return family_name(family_); }

  double pdf(double x) const noexcept;
  double log_pdf(double x) const noexcept;

  /// -inf for the real line, 0 for half-line families. Upper bound is always +inf.
  double support_lower() const noexcept;
  bool on_real_line() const noexcept;
  bool is_even() const noexcept;

  /// h(p) when a closed form is registered (only Cauchy: log 4*pi).
  std::optional<double> standard_entropy() const noexcept;

  friend bool operator==(const StandardDensity&, const StandardDensity&) = default;

 private:
  Family family_;
};

/// Throws CatalogError naming the valid families.
StandardDensity catalog(std::string_view name);

/// The density (1/s) p((x - l)/s) generated by acting with (l, s) on a standard density.
class LocationScaleDensity {
 public:
  LocationScaleDensity(StandardDensity standard, GroupElement elem) noexcept
      : std_(standard), elem_(elem) {}

  const StandardDensity& standard() const noexcept { return std_; }
  const GroupElement& element() const noexcept { return elem_; }
  double location() const noexcept { return elem_.location(); }
  double scale() const noexcept { return elem_.scale(); }

  double pdf(double x) const noexcept;
  double log_pdf(double x) const noexcept;

  /// l + s * standard().support_lower(); -inf for real-line families.
  double support_lower() const noexcept;

  /// Same family, new group element.
  LocationScaleDensity with(GroupElement elem) const noexcept { return {std_, elem}; }

 private:
  StandardDensity std_;
  GroupElement elem_;
};

/// Closed-form h(p_{l,s}) = h(p) + log s when the standard entropy is known.
std::optional<double> entropy_closed(const LocationScaleDensity& d) noexcept;

/// Parses "<family>:<loc>,<scale>", e.g. "cauchy:0,1".
LocationScaleDensity parse_density_spec(std::string_view spec);

}  // namespace lsdiv
