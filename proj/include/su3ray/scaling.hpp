#pragma once

#include <cstdint>
#include <string>

#include "su3ray/root_system.hpp"

namespace su3ray {

/// How the rescaling factor s_k grows along a ray.
struct ScalingScheme {
  enum class Kind { None, Parameter, Dimension, Power };

  Kind kind = Kind::None;
  double exponent = 1.0;  // Power only

  static ScalingScheme none() { return {Kind::None, 1.0}; }
  static ScalingScheme parameter() { return {Kind::Parameter, 1.0}; }
  static ScalingScheme dimension() { return {Kind::Dimension, 1.0}; }
  static ScalingScheme power(double p) { return {Kind::Power, p}; }

  /// "none", "parameter", "dimension" or "power:P". Throws ConfigError.
  static ScalingScheme parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const ScalingScheme&, const ScalingScheme&) = default;
};

/// s_k for the ray through lambda: 1 (none), k (parameter),
/// weyl_dim(k*lambda) (dimension) or ceil(k^p) (power). Every scheme
/// returns 1 at k = 0.
std::int64_t scaling_sequence(const ScalingScheme& scheme, const HighestWeight& lambda, int k);

}  // namespace su3ray
