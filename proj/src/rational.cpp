#include "su3ray/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "su3ray/errors.hpp"

namespace su3ray {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError("malformed number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (!fits64(n) || !fits64(d)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rational Rational::operator-() const {
  return from_wide(-static_cast<__int128>(num_), den_);
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    *this = from_wide(static_cast<__int128>(num_) + o.num_, den_);
  } else {
    *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                      static_cast<__int128>(den_) * o.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  *this = from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
  }
  std::string_view mantissa = text;
  int exp10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    if (e + 1 >= text.size()) throw ConfigError("malformed number: '" + std::string(text) + "'");
    exp10 =static_cast<int>(parse_int(text.substr(e + 1 + (text[e + 1] == '+')), text));
  }
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string digits(mantissa.substr(0, dot));
    std::string_view frac = mantissa.substr(dot + 1);
    digits.append(frac);
    exp10 -= static_cast<int>(frac.size());
    if (digits.empty() || digits == "-" || digits == "+") throw ConfigError("malformed number: '" + std::string(text) + "'");
    if (digits.front() == '+') digits.erase(0, 1);
    return Rational(parse_int(digits, text)) * pow(Rational(10), exp10);
  }
  if (!mantissa.empty() && mantissa.front() == '+') mantissa.remove_prefix(1);
  return Rational(parse_int(mantissa, text)) * pow(Rational(10), exp10);
}

Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

Rational pow(const Rational& base, int exponent) {
  Rational result(1);
  Rational b = exponent < 0 ? Rational(1) / base : base;
  unsigned e = exponent < 0 ? static_cast<unsigned>(-exponent) : static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::string ComplexRational::to_string() const {
  if (im.is_zero()) return re.to_string();
  std::string imag = im.to_string() + "i";
  if (re.is_zero()) return imag;
  return "(" + re.to_string() + (im.num() > 0 ? "+" : "") + imag + ")";
}

std::ostream& operator<<(std::ostream& os, const ComplexRational& c) { return os << c.to_string(); }

}  // namespace su3ray
