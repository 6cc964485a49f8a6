#pragma once

// Elements of the universal enveloping algebra of sl3(C), stored as linear
// combinations of generator words. Words are kept exactly as written: two
// words that differ only by the order of non-commuting generators are
// distinct terms.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "su3ray/rational.hpp"

namespace su3ray {

/// Basis of sl3 used throughout. Declaration order is the global generator
/// ordering (it fixes how words sort inside an expression).
enum class Generator : std::uint8_t { S12, S13, S21, S23, S31, S32, T3, H2 };

inline constexpr std::array<Generator, 8> kAllGenerators = {
    Generator::S12, Generator::S13, Generator::S21, Generator::S23,
    Generator::S31, Generator::S32, Generator::T3,  Generator::H2};

inline constexpr std::array<Generator, 6> kRootGenerators = {
    Generator::S12, Generator::S13, Generator::S21,
    Generator::S23, Generator::S31, Generator::S32};

/// S(i,j) with 1 <= i,j <= 3 and i != j; throws ConfigError otherwise.
Generator root_generator(int i, int j);
bool is_root_generator(Generator g);
/// (i,j) for S(i,j). Precondition: is_root_generator(g).
std::pair<int, int> root_indices(Generator g);
/// S(i,j) -> S(j,i); Cartan generators are self-adjoint.
Generator adjoint(Generator g);
std::string_view name(Generator g);
std::optional<Generator> parse_generator(std::string_view token);
/// The defining 3x3 matrix: S(i,j) has a single 1 at (i,j), T3 = diag(1,0,-1),
/// H2 = diag(0,1,-1).
std::array<std::array<int, 3>, 3> defining_matrix(Generator g);

using Word = std::vector<Generator>;

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<ComplexRational> {
  static bool is_zero(const ComplexRational& c) { return c.is_zero(); }
  static ComplexRational conj(const ComplexRational& c) { return c.conj(); }
  static bool close(const ComplexRational& a, const ComplexRational& b) { return a == b; }
  static ComplexRational inverse_power(std::int64_t s, int d) {
    return ComplexRational(pow(Rational(s), -d));
  }
};

template <>
struct CoeffTraits<std::complex<double>> {
  static constexpr double kTolerance = 1e-12;
  static bool is_zero(const std::complex<double>& c) { return c == 0.0; }
  static std::complex<double> conj(const std::complex<double>& c) { return std::conj(c); }
  static bool close(const std::complex<double>& a, const std::complex<double>& b) {
    return std::abs(a - b) <= kTolerance;
  }
  static std::complex<double> inverse_power(std::int64_t s, int d) {
    return std::pow(static_cast<double>(s), -d);
  }
};

/// A finite linear combination of generator words with coefficients in C.
/// No stored term ever has a zero coefficient.
template <class C>
class BasicExpr {
 public:
  using Coeff = C;
  using Terms = std::map<Word, C>;
  using Traits = CoeffTraits<C>;

  BasicExpr() = default;

  static BasicExpr word(Word w, C coeff = C(1)) {
    BasicExpr e;
    e.add_term(w, coeff);
    return e;
  }
  static BasicExpr generator(Generator g, C coeff = C(1)) { return word(Word{g}, coeff); }
  /// Multiple of the unit element (the empty word).
  static BasicExpr scalar(C coeff) { return word(Word{}, coeff); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Longest word length; 0 for scalars and for the zero expression.
  int degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.size());
    return static_cast<int>(d);
  }

  BasicExpr homogeneous_part(int d) const {
    BasicExpr out;
    for (const auto& [w, c] : terms_) {
      if (static_cast<int>(w.size()) == d) out.terms_.emplace(w, c);
    }
    return out;
  }

  void add_term(const Word& w, const C& coeff) {
    if (Traits::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
      it->second += coeff;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  BasicExpr& operator+=(const BasicExpr& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  BasicExpr& operator-=(const BasicExpr& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  BasicExpr operator-() const {
    BasicExpr out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
  }
  BasicExpr& operator*=(const C& s) {
    if (Traits::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend BasicExpr operator+(BasicExpr a, const BasicExpr& b) { return a += b; }
  friend BasicExpr operator-(BasicExpr a, const BasicExpr& b) { return a -= b; }
  friend BasicExpr operator*(BasicExpr a, const C& s) { return a *= s; }
  friend BasicExpr operator*(const C& s, BasicExpr a) { return a *= s; }

  /// Non-commutative product: words are concatenated, left factor first.
  friend BasicExpr operator*(const BasicExpr& a, const BasicExpr& b) {
    BasicExpr out;
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) {
        Word w;
        w.reserve(wa.size() + wb.size());
        w.insert(w.end(), wa.begin(), wa.end());
        w.insert(w.end(), wb.begin(), wb.end());
        C c = ca;
        c *= cb;
        out.add_term(w, c);
      }
    }
    return out;
  }

  friend bool operator==(const BasicExpr&, const BasicExpr&) = default;

 private:
  Terms terms_;
};

using Expr = BasicExpr<ComplexRational>;
using ExprF = BasicExpr<std::complex<double>>;

/// Anti-linear anti-involution: conjugates coefficients, reverses each word
/// and replaces every generator by its adjoint.
template <class C>
BasicExpr<C> dagger(const BasicExpr<C>& e) {
  BasicExpr<C> out;
  for (const auto& [w, c] : e.terms()) {
    Word rev(w.rbegin(), w.rend());
    for (auto& g : rev) g = adjoint(g);
    out.add_term(rev, CoeffTraits<C>::conj(c));
  }
  return out;
}

/// True iff dagger(e) == e term by term (exact for rationals, 1e-12 for
/// floating coefficients).
template <class C>
bool is_abstract_hermitian(const BasicExpr<C>& e) {
  const BasicExpr<C> d = dagger(e);
  auto covered = [](const BasicExpr<C>& a, const BasicExpr<C>& b) {
    for (const auto& [w, c] : a.terms()) {
      auto it = b.terms().find(w);
      const C other = it == b.terms().end() ? C(0) : it->second;
      if (!CoeffTraits<C>::close(c, other)) return false;
    }
    return true;
  };
  return covered(e, d) && covered(d, e);
}

/// Divides every word of length d by s^d. Requires s >= 1.
template <class C>
BasicExpr<C> rescale(const BasicExpr<C>& e, std::int64_t s) {
  if (s < 1) throw std::invalid_argument("rescale: factor must be >= 1");
  BasicExpr<C> out;
  for (const auto& [w, c] : e.terms()) {
    C scaled = c;
    scaled *= CoeffTraits<C>::inverse_power(s, static_cast<int>(w.size()));
    out.add_term(w, scaled);
  }
  return out;
}

ExprF to_float(const Expr& e);

/// True when every coefficient has zero imaginary part.
bool has_real_coefficients(const Expr& e);

/// Round-trippable text form, e.g. "1*T3 + 1*S12*S12 + (1/2+3i)*S21".
std::string to_string(const Expr& e);

/// Parses the expression literal syntax:
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := power ('*' power)*
///   power   := primary ['^' integer]
///   primary := number | number 'i' | 'i' | generator | '(' expr ')'
/// Generators are S12, S13, S21, S23, S31, S32, T3, H2. Numbers may be
/// integers, p/q rationals or decimals and are kept exact.
/// Throws ConfigError on malformed input.
Expr parse_expr(std::string_view text);

/// a*T3 + b*sum_{i != j} S(i,j)^2.
Expr lipkin_hamiltonian(const Rational& a, const Rational& b);

}  // namespace su3ray
