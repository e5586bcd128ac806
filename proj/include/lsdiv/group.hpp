#pragma once

#include <iosfwd>

namespace lsdiv {

/// Element (l, s) of the location-scale group R x R++.
///
/// Acts on the sample space by x -> l + s*x. Construction rejects a
/// non-finite location and a scale that is not finite and strictly positive.
class GroupElement {
 public:
  GroupElement(double location, double scale);

  double location() const noexcept { return l_; }
  double scale() const noexcept { return s_; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  double l_;
  double s_;
};

GroupElement identity() noexcept;

/// (l1 + s1*l2, s1*s2)
GroupElement compose(const GroupElement& e1, const GroupElement& e2);

/// (-l/s, 1/s)
GroupElement inverse(const GroupElement& e);

/// l + s*x
double act(const GroupElement& e, double x) noexcept;

/// Inverse action (x - l)/s, i.e. act(inverse(e), x) without forming the inverse.
double pull_back(const GroupElement& e, double x) noexcept;

std::ostream& operator<<(std::ostream& os, const GroupElement& e);

}  // namespace lsdiv
