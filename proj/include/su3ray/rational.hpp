#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace su3ray {

/// Exact rational number backed by 64-bit integers.
///
/// Always normalized: gcd(num, den) == 1 and den > 0. Intermediate products
/// are formed in 128 bits; a result that does not fit back into 64 bits
/// throws std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  /// Parses "p", "p/q", decimals ("-0.125") and scientific notation ("3e-2").
  static Rational parse(std::string_view text);

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& r);
/// Integer power; negative exponents invert.
Rational pow(const Rational& base, int exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Complex number with exact rational parts.
struct ComplexRational {
  Rational re;
  Rational im;

  constexpr ComplexRational() = default;
  constexpr ComplexRational(Rational r) : re(r) {}  // NOLINT(implicit)
  constexpr ComplexRational(std::int64_t r) : re(r) {}  // NOLINT(implicit)
  constexpr ComplexRational(Rational r, Rational i) : re(r), im(i) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  ComplexRational conj() const { return {re, -im}; }
  std::string to_string() const;

  ComplexRational operator-() const { return {-re, -im}; }
  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }
  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

std::ostream& operator<<(std::ostream& os, const ComplexRational& c);

}  // namespace su3ray
