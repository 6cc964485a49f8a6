#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "su3ray/errors.hpp"
#include "su3ray/rational.hpp"

using su3ray::ComplexRational;
using su3ray::Rational;

TEST_CASE("rationals stay normalized") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(su3ray::pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("parse accepts integers, fractions and decimals exactly") {
  CHECK(Rational::parse("17") == Rational(17));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("0.125") == Rational(1, 8));
  CHECK(Rational::parse("-2.5") == Rational(-5, 2));
  CHECK(Rational::parse("3e-2") == Rational(3, 100));
  CHECK(Rational::parse("1.5E+1") == Rational(15));
  CHECK_THROWS_AS(Rational::parse("abc"), su3ray::ConfigError);
  CHECK_THROWS_AS(Rational::parse("1e"), su3ray::ConfigError);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("overflow is reported, not wrapped") {
  Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("complex rationals") {
  ComplexRational i(Rational(0), Rational(1));
  CHECK(i * i == ComplexRational(-1));
  CHECK(i.conj() == ComplexRational(Rational(0), Rational(-1)));
  CHECK(ComplexRational(Rational(1, 2), Rational(3)).to_string() == "(1/2+3i)");
  CHECK(ComplexRational(Rational(-2)).is_real());
}
