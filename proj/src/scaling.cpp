#include "su3ray/scaling.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "su3ray/errors.hpp"

namespace su3ray {

ScalingScheme ScalingScheme::parse(const std::string& text) {
  if (text == "none") return none();
  if (text == "parameter") return parameter();
  if (text == "dimension") return dimension();
  if (text.rfind("power:", 0) == 0) {
    std::string arg = text.substr(6);
    try {
      std::size_t used = 0;
      double p = std::stod(arg, &used);
      if (used != arg.size() || !(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("p");
      return power(p);
    } catch (const std::exception&) {
      throw ConfigError("power scaling needs a positive exponent, got '" + arg + "'");
    }
  }
  throw ConfigError("unknown scaling scheme '" + text + "' (expected none|parameter|dimension|power:P)");
}

std::string ScalingScheme::to_string() const {
  switch (kind) {
    case Kind::None: return "none";
    case Kind::Parameter: return "parameter";
    case Kind::Dimension: return "dimension";
    case Kind::Power: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "power:%g", exponent);
      return buf;
    }
  }
  return "?";
}

std::int64_t scaling_sequence(const ScalingScheme& scheme, const HighestWeight& lambda, int k) {
  if (k < 0) throw ConfigError("scaling_sequence: k must be >= 0");
  if (k == 0) return 1;
  switch (scheme.kind) {
    case ScalingScheme::Kind::None: return 1;
    case ScalingScheme::Kind::Parameter: return k;
    case ScalingScheme::Kind::Dimension:
      return static_cast<std::int64_t>(weyl_dim(ray_weight(lambda, k)));
    case ScalingScheme::Kind::Power: {
      double v = std::pow(static_cast<double>(k), scheme.exponent);
      // k^p for integral p is exact in double up to 2^53; snap tiny round-off
      // so that e.g. 8^(2/3) does not ceil to 5.
      double r = std::round(v);
      if (std::abs(v - r) <= 1e-9 * std::max(1.0, r)) v = r;
      if (v > static_cast<double>(std::numeric_limits<std::int64_t>::max() / 2)) {
        throw ConfigError("scaling factor overflows");
      }
      return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(v)));
    }
  }
  throw ConfigError("unknown scaling scheme");
}

}  // namespace su3ray
