#pragma once

// Irreducible SU(3) representations realized on bi-homogeneous polynomials in
// the minors x1,x2,x3 (first column) and y1,y2,y3 (2x2 minors of the first
// two columns), modulo the relation x1*y1 + x2*y2 + x3*y3 = 0.
//
// A monomial x1^a1 x2^a2 x3^a3 y1^b1 y2^b2 y3^b3 is written
// [a1,a2,a3,b1,b2,b3]; it is canonical when a3*b3 == 0. Canonical monomials
// of bidegree (l1,l2) form a basis of the representation with highest
// weight (l1,l2).
//
// Sign convention: generators act through g^{-1} on the matrix argument, so
// S(i,j) acts as -x_j d/dx_i + y_i d/dy_j and T3 has eigenvalue -1 on x1.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "su3ray/expr.hpp"
#include "su3ray/rational.hpp"
#include "su3ray/root_system.hpp"
#include "su3ray/sparse_matrix.hpp"

namespace su3ray {

struct Monomial {
  std::array<int, 6> exps{};  // a1 a2 a3 b1 b2 b3

  Monomial() = default;
  Monomial(int a1, int a2, int a3, int b1, int b2, int b3) : exps{a1, a2, a3, b1, b2, b3} {}

  /// 1-based accessors.
  int a(int i) const { return exps[static_cast<std::size_t>(i - 1)]; }
  int b(int j) const { return exps[static_cast<std::size_t>(j + 2)]; }
  int& a(int i) { return exps[static_cast<std::size_t>(i - 1)]; }
  int& b(int j) { return exps[static_cast<std::size_t>(j + 2)]; }

  std::pair<int, int> bidegree() const { return {a(1) + a(2) + a(3), b(1) + b(2) + b(3)}; }
  bool is_canonical() const { return a(3) == 0 || b(3) == 0; }
  std::string to_string() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Linear combination of monomials as produced before reduction. Monomials
/// may be non-canonical; coefficients may repeat or cancel.
using RawTerms = std::vector<std::pair<Monomial, Rational>>;

/// Element of a graded piece of R: canonical monomials of a single bidegree
/// with non-zero exact coefficients.
class PolyVector {
 public:
  using Terms = std::map<Monomial, Rational>;

  PolyVector() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  /// Adds c*m. Throws std::invalid_argument if m is not canonical or its
  /// bidegree differs from the terms already present.
  void add(const Monomial& m, const Rational& c);

  PolyVector& operator+=(const PolyVector& o);
  PolyVector& operator*=(const Rational& s);

  friend bool operator==(const PolyVector&, const PolyVector&) = default;

 private:
  Terms terms_;
};

/// Rewrites x3*y3 -> -x1*y1 - x2*y2 until every monomial is canonical,
/// always expanding the lexicographically smallest non-canonical monomial.
/// Throws std::invalid_argument on mixed bidegrees.
PolyVector reduce(const RawTerms& raw);

/// The action of a single generator on a canonical monomial, reduced.
PolyVector apply_generator(Generator g, const Monomial& m);
PolyVector apply_generator(Generator g, const PolyVector& v);

/// Applies e to m; for a word g1 g2 ... gd the rightmost generator acts
/// first. The empty word acts as the identity. Throws ConfigError when e has
/// non-real coefficients.
PolyVector apply_expr(const Expr& e, const Monomial& m);

struct WeightVector {
  int t3;
  int h2;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

/// Eigenvalues of T3 and H2 on m:
///   t3 = -a1 + a3 + b1 - b3,  h2 = -a2 + a3 + b2 - b3.
WeightVector weight_of(const Monomial& m);

/// All canonical monomials of bidegree (l1,l2). Ordered descending
/// lexicographically in the exponent vector, so x1 comes before x2 before x3.
std::vector<Monomial> basis(const HighestWeight& lambda);

enum class WeightDirection { T3, H2, Generic };

/// Number of distinct weight values over basis(lambda); Generic counts
/// distinct (t3,h2) pairs.
std::size_t distinct_weight_count(const HighestWeight& lambda, WeightDirection direction);

/// The representation space with a monomial -> basis index lookup, for
/// assembling several operators on the same weight.
class Representation {
 public:
  explicit Representation(const HighestWeight& lambda);

  const HighestWeight& weight() const { return lambda_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  /// Position of m in basis(); throws std::out_of_range if absent.
  std::size_t index_of(const Monomial& m) const;

  /// Column j holds the coordinates of apply_expr(e, basis()[j]).
  SparseMatrix matrix_of(const Expr& e) const;

 private:
  HighestWeight lambda_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
};

SparseMatrix matrix_of(const Expr& e, const HighestWeight& lambda);

}  // namespace su3ray
