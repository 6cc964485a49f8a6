#pragma once

#include <stdexcept>
#include <string>

namespace su3ray {

/// Invalid user input: bad weights, malformed expressions, out-of-range
/// configuration. The CLI maps this to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Eigensolver failure or a spectrum that should be real but is not.
/// The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace su3ray
