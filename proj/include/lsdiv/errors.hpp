#pragma once

#include <stdexcept>
#include <string>

namespace lsdiv {

/// Bad user input: invalid parameters, malformed density specs, unknown names.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unknown family or generator name. The message lists the valid options.
class CatalogError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// The integrand produced NaN at an interior point.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lsdiv
