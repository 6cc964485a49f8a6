#include "su3ray/root_system.hpp"

#include <stdexcept>

#include "su3ray/errors.hpp"

namespace su3ray {

HighestWeight::HighestWeight(int l1, int l2) : l1_(l1), l2_(l2) {
  if (l1 < 0 || l2 < 0) {
    throw ConfigError("highest weight labels must be non-negative, got (" + std::to_string(l1) +
                      "," + std::to_string(l2) + ")");
  }
}

std::string HighestWeight::to_string() const {
  return "(" + std::to_string(l1_) + "," + std::to_string(l2_) + ")";
}

HighestWeight HighestWeight::parse(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ConfigError("weight must be given as L1,L2: '" + text + "'");
  try {
    std::size_t used1 = 0;
    std::size_t used2 = 0;
    std::string a = text.substr(0, comma);
    std::string b = text.substr(comma + 1);
    int l1 = std::stoi(a, &used1);
    int l2 = std::stoi(b, &used2);
    if (used1 != a.size() || used2 != b.size()) throw std::invalid_argument("trailing");
    return HighestWeight(l1, l2);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("weight must be given as L1,L2: '" + text + "'");
  }
}

const RootData& a2_root_data() {
  static const RootData data{
      {{PositiveRoot{{2, -1}, {1, 0}}, PositiveRoot{{-1, 2}, {0, 1}}, PositiveRoot{{1, 1}, {1, 1}}}},
      HighestWeight(1, 1),
      6};
  return data;
}

int pairing(const HighestWeight& lambda, const PositiveRoot& alpha) {
  return alpha.coroot[0] * lambda.l1() + alpha.coroot[1] * lambda.l2();
}

std::uint64_t weyl_dim(const HighestWeight& lambda) {
  const RootData& rd = a2_root_data();
  Rational d(1);
  for (const auto& alpha : rd.positive_roots) {
    d *= Rational(pairing(lambda, alpha) + pairing(rd.delta, alpha), pairing(rd.delta, alpha));
  }
  if (!d.is_integer()) throw std::logic_error("Weyl dimension is not an integer");
  return static_cast<std::uint64_t>(d.num());
}

Rational dim_lower_bound(const HighestWeight& lambda) {
  const RootData& rd = a2_root_data();
  Rational b(1);
  for (const auto& alpha : rd.positive_roots) {
    int p = pairing(lambda, alpha);
    if (p > 0) b *= Rational(p, pairing(rd.delta, alpha));
  }
  return b;
}

std::uint64_t weight_count_bound(const HighestWeight& lambda) {
  return static_cast<std::uint64_t>(a2_root_data().weyl_order) *
         static_cast<std::uint64_t>(lambda.l1() + 1) * static_cast<std::uint64_t>(lambda.l2() + 1);
}

int q_of(const HighestWeight& lambda) {
  int q = 0;
  for (const auto& alpha : a2_root_data().positive_roots) q += pairing(lambda, alpha) > 0 ? 1 : 0;
  return q;
}

HighestWeight ray_weight(const HighestWeight& lambda, int k) {
  if (k < 1) throw ConfigError("ray index k must be >= 1, got " + std::to_string(k));
  return HighestWeight(k * lambda.l1(), k * lambda.l2());
}

Rational orbit_volume(const HighestWeight& lambda) {
  const RootData& rd = a2_root_data();
  Rational v(1);
  for (const auto& alpha : rd.positive_roots) {
    v *= Rational(pairing(lambda, alpha), pairing(rd.delta, alpha));
  }
  return v;
}

Rational ratio_bound(const HighestWeight& lambda, int k) {
  if (lambda.is_zero()) throw ConfigError("ratio_bound is undefined for the trivial weight (Q is empty)");
  const RootData& rd = a2_root_data();
  const HighestWeight scaled = ray_weight(lambda, k);
  Rational numerator(rd.weyl_order);
  numerator *= Rational(scaled.l1() + 1) * Rational(scaled.l2() + 1);
  return numerator / dim_lower_bound(scaled);
}

}  // namespace su3ray
