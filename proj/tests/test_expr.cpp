#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "su3ray/errors.hpp"
#include "su3ray/expr.hpp"
#include "su3ray/scaling.hpp"

using namespace su3ray;

namespace {

const ComplexRational kI(Rational(0), Rational(1));

Expr random_expr(std::mt19937& rng, int max_degree = 3, int max_terms = 8) {
  std::uniform_int_distribution<int> nterms(0, max_terms), deg(0, max_degree), gen(0, 7), num(-9, 9), den(1, 4);
  Expr e;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Word w;
    const int d = deg(rng);
    for (int i = 0; i < d; ++i) w.push_back(kAllGenerators[static_cast<std::size_t>(gen(rng))]);
    e.add_term(w, ComplexRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
  }
  return e;
}

int rank_of(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    auto pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] / p[c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * p[k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("generators") {
  CHECK(root_generator(1, 2) == Generator::S12);
  CHECK(root_generator(3, 1) == Generator::S31);
  CHECK_THROWS_AS(root_generator(2, 2), ConfigError);
  CHECK_THROWS_AS(root_generator(0, 1), ConfigError);
  CHECK_THROWS_AS(root_generator(1, 4), ConfigError);
  for (Generator g : kAllGenerators) CHECK(adjoint(adjoint(g)) == g);
  CHECK(adjoint(Generator::S23) == Generator::S32);
  CHECK(adjoint(Generator::T3) == Generator::T3);

  SUBCASE("the eight defining matrices are linearly independent") {
    std::vector<std::vector<Rational>> rows;
    for (Generator g : kAllGenerators) {
      std::vector<Rational> flat;
      for (const auto& r : defining_matrix(g))
        for (int v : r) flat.emplace_back(v);
      rows.push_back(flat);
    }
    CHECK(rank_of(rows) == 8);
  }
}

TEST_CASE("dagger") {
  const Expr t3 = Expr::generator(Generator::T3);
  CHECK(dagger(kI * t3) == -(kI * t3));
  CHECK(dagger(Expr::generator(Generator::S12)) == Expr::generator(Generator::S21));

  const Expr lip = lipkin_hamiltonian(Rational(3, 2), Rational(-2));
  CHECK(dagger(lip) == lip);

  const Expr word = Expr::word({Generator::S12, Generator::T3, Generator::S31}, ComplexRational(2, 5));
  CHECK(dagger(word) == Expr::word({Generator::S13, Generator::T3, Generator::S21}, ComplexRational(2, -5)));
}

TEST_CASE("abstract hermiticity") {
  CHECK(is_abstract_hermitian(lipkin_hamiltonian(Rational(1), Rational(1))));
  CHECK(is_abstract_hermitian(lipkin_hamiltonian(Rational(-7, 3), Rational(5))));
  CHECK(is_abstract_hermitian(Expr{}));
  const Expr sym = Expr::generator(Generator::S12) + Expr::generator(Generator::S21);
  CHECK(is_abstract_hermitian(sym));
  CHECK_FALSE(is_abstract_hermitian(kI * sym));
  CHECK(is_abstract_hermitian(kI * (Expr::generator(Generator::S12) - Expr::generator(Generator::S21))));

  SUBCASE("float mode compares within 1e-12") {
    ExprF f = to_float(sym);
    f.add_term(Word{Generator::S12}, 1e-14);
    CHECK(is_abstract_hermitian(f));
    f.add_term(Word{Generator::S12}, 1e-6);
    CHECK_FALSE(is_abstract_hermitian(f));
  }
}

TEST_CASE("rescale divides by s^degree") {
  const Expr e = parse_expr("T3 + S12*S21");
  CHECK(rescale(e, 2) == parse_expr("1/2*T3 + 1/4*S12*S21"));
  CHECK(rescale(e, 1) == e);
  CHECK(rescale(rescale(e, 2), 3) == rescale(e, 6));
  CHECK_THROWS(rescale(e, 0));
}

TEST_CASE("algebraic properties on random expressions") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Expr e = random_expr(rng);
    const Expr f = random_expr(rng);
    CHECK(dagger(dagger(e)) == e);
    CHECK(dagger(e * f) == dagger(f) * dagger(e));
    CHECK(dagger(e + f) == dagger(e) + dagger(f));
    CHECK(rescale(e + f, 3) == rescale(e, 3) + rescale(f, 3));
    CHECK(rescale(e * f, 2) == rescale(e, 2) * rescale(f, 2));
    CHECK(rescale(rescale(e, 2), 5) == rescale(e, 10));
    CHECK((e * f).degree() == (e.is_zero() || f.is_zero() ? 0 : e.degree() + f.degree()));
    CHECK((e + f).degree() <= std::max(e.degree(), f.degree()));

    const Expr h = e + dagger(e);
    REQUIRE(is_abstract_hermitian(h));
    std::uniform_int_distribution<int> num(-20, 20);
    CHECK(is_abstract_hermitian(h * ComplexRational(Rational(num(rng), 7))));
    CHECK((e - e).terms().empty());
  }
}

TEST_CASE("parser") {
  const Expr lip = parse_expr("1*T3 + 1*S12^2 + 1*S13^2 + 1*S21^2 + 1*S23^2 + 1*S31^2 + 1*S32^2");
  CHECK(lip == lipkin_hamiltonian(Rational(1), Rational(1)));
  CHECK(parse_expr("(1+2i)*S12") == ComplexRational(1, 2) * Expr::generator(Generator::S12));
  CHECK(parse_expr("2i*T3 - i*H2") ==
        ComplexRational(0, 2) * Expr::generator(Generator::T3) - kI * Expr::generator(Generator::H2));
  CHECK(parse_expr("0.5*T3") == Expr::generator(Generator::T3, ComplexRational(Rational(1, 2))));
  CHECK(parse_expr("(S12 + S21)*T3") == parse_expr("S12*T3 + S21*T3"));
  CHECK(parse_expr("S12*S21 - S21*S12").size() == 2);
  CHECK(parse_expr("T3 - T3").is_zero());
  CHECK(parse_expr("-S31^0") == Expr::scalar(-1));

  CHECK_THROWS_AS(parse_expr("S11"), ConfigError);
  CHECK_THROWS_AS(parse_expr("T3 +"), ConfigError);
  CHECK_THROWS_AS(parse_expr("(T3"), ConfigError);
  CHECK_THROWS_AS(parse_expr("T3^x"), ConfigError);
  CHECK_THROWS_AS(parse_expr("T3 $"), ConfigError);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Expr e = random_expr(rng);
    CHECK(parse_expr(to_string(e)) == e);
  }
}

TEST_CASE("scaling sequences") {
  const HighestWeight any(3, 1);
  CHECK(scaling_sequence(ScalingScheme::parameter(), any, 7) == 7);
  CHECK(scaling_sequence(ScalingScheme::parameter(), any, 0) == 1);
  CHECK(scaling_sequence(ScalingScheme::dimension(), HighestWeight(1, 1), 2) == 27);
  CHECK(scaling_sequence(ScalingScheme::power(2), any, 8) == 64);
  CHECK(scaling_sequence(ScalingScheme::power(1.5), any, 2) == 3);  // ceil(2.828...)
  CHECK(scaling_sequence(ScalingScheme::power(2.0 / 3.0), any, 8) == 4);
  CHECK(scaling_sequence(ScalingScheme::none(), any, 9) == 1);

  CHECK(ScalingScheme::parse("dimension") == ScalingScheme::dimension());
  CHECK(ScalingScheme::parse("power:2") == ScalingScheme::power(2));
  CHECK(ScalingScheme::parse("power:2").to_string() == "power:2");
  CHECK_THROWS_AS(ScalingScheme::parse("quadratic"), ConfigError);
  CHECK_THROWS_AS(ScalingScheme::parse("power:-1"), ConfigError);
  CHECK_THROWS_AS(ScalingScheme::parse("power:"), ConfigError);
}
