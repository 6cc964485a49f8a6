#pragma once

// Exact A2 root-system combinatorics. All pairings are coroot pairings
// <lambda, alpha^vee>, which are integers on the weight lattice.

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "su3ray/rational.hpp"

namespace su3ray {

/// Dynkin labels (l1, l2) of a dominant weight l1*f1 + l2*f2.
class HighestWeight {
 public:
  HighestWeight() = default;
  /// Throws ConfigError on negative labels.
  HighestWeight(int l1, int l2);

  int l1() const { return l1_; }
  int l2() const { return l2_; }
  bool is_interior() const { return l1_ > 0 && l2_ > 0; }
  bool is_zero() const { return l1_ == 0 && l2_ == 0; }
  std::string to_string() const;

  /// Parses "L1,L2".
  static HighestWeight parse(const std::string& text);

  friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;

 private:
  int l1_ = 0;
  int l2_ = 0;
};

struct PositiveRoot {
  /// Dynkin labels of the root itself (its pairings with the simple coroots).
  std::array<int, 2> labels;
  /// Expansion of alpha^vee in the simple coroots; <lambda, alpha^vee> is
  /// then coroot[0]*l1 + coroot[1]*l2.
  std::array<int, 2> coroot;
};

struct RootData {
  std::array<PositiveRoot, 3> positive_roots;
  HighestWeight delta;
  int weyl_order;
};

/// The A2 data: alpha1 = (2,-1), alpha2 = (-1,2), alpha1+alpha2 = (1,1);
/// delta = (1,1); |W| = 6.
const RootData& a2_root_data();

int pairing(const HighestWeight& lambda, const PositiveRoot& alpha);

/// Weyl dimension formula, (l1+1)(l2+1)(l1+l2+2)/2.
std::uint64_t weyl_dim(const HighestWeight& lambda);

/// prod over alpha with <lambda,alpha> > 0 of <lambda,alpha>/<delta,alpha>.
Rational dim_lower_bound(const HighestWeight& lambda);

/// |W| * prod_j (l_j + 1), an upper bound on the number of weights.
std::uint64_t weight_count_bound(const HighestWeight& lambda);

/// Number of positive roots with <lambda,alpha> > 0: 3 in the interior,
/// 2 on the chamber border, 0 for the trivial weight.
int q_of(const HighestWeight& lambda);

HighestWeight ray_weight(const HighestWeight& lambda, int k);

/// prod over all positive roots of <lambda,alpha>/<delta,alpha>,
/// i.e. l1*l2*(l1+l2)/2. Zero on the chamber border.
Rational orbit_volume(const HighestWeight& lambda);

/// Upper bound on (#distinct eigenvalues)/dim for a Cartan element on the
/// ray through lambda at step k:
///   |W| prod_j (k l_j + 1) / prod_{alpha in Q} <k lambda,alpha>/<delta,alpha>.
/// Throws ConfigError for the trivial weight (Q is empty).
Rational ratio_bound(const HighestWeight& lambda, int k);

}  // namespace su3ray
