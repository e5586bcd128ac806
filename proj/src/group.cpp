#include "lsdiv/group.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "lsdiv/errors.hpp"

namespace lsdiv {

GroupElement::GroupElement(double location, double scale) : l_(location), s_(scale) {
  if (!std::isfinite(location)) {
    std::ostringstream msg;
    msg << "location must be finite, got " << location;
    throw InvalidArgument(msg.str());
  }
  if (!std::isfinite(scale) || !(scale > 0.0)) {
    std::ostringstream msg;
    msg << "scale must be finite and > 0, got " << scale;
    throw InvalidArgument(msg.str());
  }
}

GroupElement identity() noexcept { return GroupElement(0.0, 1.0); }

GroupElement compose(const GroupElement& e1, const GroupElement& e2) {
  return GroupElement(e1.location() + e1.scale() * e2.location(), e1.scale() * e2.scale());
}

GroupElement inverse(const GroupElement& e) {
  return GroupElement(-e.location() / e.scale(), 1.0 / e.scale());
}

double act(const GroupElement& e, double x) noexcept { return e.location() + e.scale() * x; }

double pull_back(const GroupElement& e, double x) noexcept {
  return (x - e.location()) / e.scale();
}

std::ostream& operator<<(std::ostream& os, const GroupElement& e) {
  return os << '(' << e.location() << ", " << e.scale() << ')';
}

}  // namespace lsdiv
