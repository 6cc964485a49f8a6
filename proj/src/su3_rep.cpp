#include "su3ray/su3_rep.hpp"

#include <set>
#include <stdexcept>

#include "su3ray/errors.hpp"

namespace su3ray {

std::string Monomial::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i != 0) s += ",";
    s += std::to_string(exps[i]);
  }
  return s + "]";
}

Rational PolyVector::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PolyVector::add(const Monomial& m, const Rational& c) {
  if (!m.is_canonical()) throw std::invalid_argument("PolyVector: non-canonical monomial " + m.to_string());
  if (!terms_.empty() && terms_.begin()->first.bidegree() != m.bidegree()) {
    throw std::invalid_argument("PolyVector: mixed bidegrees");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyVector& PolyVector::operator+=(const PolyVector& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

PolyVector& PolyVector::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

PolyVector reduce(const RawTerms& raw) {
  PolyVector out;
  if (raw.empty()) return out;
  const auto degree = raw.front().first.bidegree();
  std::map<Monomial, Rational> pending;
  std::map<Monomial, Rational> done;
  auto route = [&](const Monomial& m) -> Rational& { return m.is_canonical() ? done[m] : pending[m]; };

  for (const auto& [m, c] : raw) {
    if (m.bidegree() != degree) throw std::invalid_argument("reduce: mixed bidegrees");
    for (int e : m.exps) {
      if (e < 0) throw std::invalid_argument("reduce: negative exponent in " + m.to_string());
    }
    if (!c.is_zero()) route(m) += c;
  }
  // Each rewrite lowers min(a3,b3) by one and only produces lexicographically
  // larger monomials, so taking the front of `pending` visits each once.
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Monomial& m = node.key();
    const Rational c = node.mapped();
    if (c.is_zero()) continue;
    Monomial r1 = m;
    --r1.a(3);
    --r1.b(3);
    Monomial r2 = r1;
    ++r1.a(1);
    ++r1.b(1);
    ++r2.a(2);
    ++r2.b(2);
    route(r1) -= c;
    route(r2) -= c;
  }
  for (const auto& [m, c] : done) out.add(m, c);
  return out;
}

namespace {

void raw_action(Generator g, const Monomial& m, const Rational& coeff, RawTerms& out) {
  if (g == Generator::T3 || g == Generator::H2) {
    const WeightVector w = weight_of(m);
    const int ev = g == Generator::T3 ? w.t3 : w.h2;
    if (ev != 0) out.emplace_back(m, coeff * Rational(ev));
    return;
  }
  // S(i,j) = -x_j d/dx_i + y_i d/dy_j
  const auto [i, j] = root_indices(g);
  if (m.a(i) > 0) {
    Monomial n = m;
    --n.a(i);
    ++n.a(j);
    out.emplace_back(n, coeff * Rational(-m.a(i)));
  }
  if (m.b(j) > 0) {
    Monomial n = m;
    --n.b(j);
    ++n.b(i);
    out.emplace_back(n, coeff * Rational(m.b(j)));
  }
}

}  // namespace

PolyVector apply_generator(Generator g, const Monomial& m) {
  RawTerms raw;
  raw_action(g, m, Rational(1), raw);
  return reduce(raw);
}

PolyVector apply_generator(Generator g, const PolyVector& v) {
  RawTerms raw;
  raw.reserve(2 * v.size());
  for (const auto& [m, c] : v.terms()) raw_action(g, m, c, raw);
  return reduce(raw);
}

PolyVector apply_expr(const Expr& e, const Monomial& m) {
  if (!has_real_coefficients(e)) {
    throw ConfigError("operator has non-real coefficients; only real operators can be assembled");
  }
  PolyVector result;
  PolyVector start;
  start.add(m, Rational(1));
  for (const auto& [word, coeff] : e.terms()) {
    PolyVector v = start;
    for (auto it = word.rbegin(); it != word.rend() && !v.is_zero(); ++it) v = apply_generator(*it, v);
    v *= coeff.re;
    result += v;
  }
  return result;
}

WeightVector weight_of(const Monomial& m) {
  return {-m.a(1) + m.a(3) + m.b(1) - m.b(3), -m.a(2) + m.a(3) + m.b(2) - m.b(3)};
}

std::vector<Monomial> basis(const HighestWeight& lambda) {
  const int l1 = lambda.l1();
  const int l2 = lambda.l2();
  std::vector<Monomial> out;
  out.reserve(weyl_dim(lambda));
  for (int a1 = l1; a1 >= 0; --a1) {
    for (int a2 = l1 - a1; a2 >= 0; --a2) {
      const int a3 = l1 - a1 - a2;
      for (int b1 = l2; b1 >= 0; --b1) {
        for (int b2 = l2 - b1; b2 >= 0; --b2) {
          const int b3 = l2 - b1 - b2;
          if (a3 * b3 == 0) out.emplace_back(a1, a2, a3, b1, b2, b3);
        }
      }
    }
  }
  return out;
}

std::size_t distinct_weight_count(const HighestWeight& lambda, WeightDirection direction) {
  std::set<std::pair<int, int>> seen;
  for (const auto& m : basis(lambda)) {
    const WeightVector w = weight_of(m);
    switch (direction) {
      case WeightDirection::T3: seen.emplace(w.t3, 0); break;
      case WeightDirection::H2: seen.emplace(w.h2, 0); break;
      case WeightDirection::Generic: seen.emplace(w.t3, w.h2); break;
    }
  }
  return seen.size();
}

Representation::Representation(const HighestWeight& lambda) : lambda_(lambda), basis_(su3ray::basis(lambda)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::size_t Representation::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::out_of_range("monomial " + m.to_string() + " not in basis");
  return it->second;
}

SparseMatrix Representation::matrix_of(const Expr& e) const {
  if (!has_real_coefficients(e)) {
    throw ConfigError("operator has non-real coefficients; only real operators can be assembled");
  }
  SparseMatrix out(dim());
  for (std::size_t col = 0; col < dim(); ++col) {
    const PolyVector v = apply_expr(e, basis_[col]);
    std::vector<MatrixEntry> entries;
    entries.reserve(v.size());
    for (const auto& [m, c] : v.terms()) entries.push_back({index_of(m), c});
    out.set_column(col, std::move(entries));
  }
  return out;
}

SparseMatrix matrix_of(const Expr& e, const HighestWeight& lambda) {
  return Representation(lambda).matrix_of(e);
}

}  // namespace su3ray
