#include "su3ray/expr.hpp"

#include <cctype>

#include "su3ray/errors.hpp"

namespace su3ray {

Generator root_generator(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) {
    throw ConfigError("S(" + std::to_string(i) + "," + std::to_string(j) +
                      ") is not a root generator; need i != j in 1..3");
  }
  static constexpr Generator table[3][3] = {
      {Generator::T3, Generator::S12, Generator::S13},
      {Generator::S21, Generator::T3, Generator::S23},
      {Generator::S31, Generator::S32, Generator::T3}};
  return table[i - 1][j - 1];
}

bool is_root_generator(Generator g) { return g != Generator::T3 && g != Generator::H2; }

std::pair<int, int> root_indices(Generator g) {
  switch (g) {
    case Generator::S12: return {1, 2};
    case Generator::S13: return {1, 3};
    case Generator::S21: return {2, 1};
    case Generator::S23: return {2, 3};
    case Generator::S31: return {3, 1};
    case Generator::S32: return {3, 2};
    default: break;
  }
  throw std::logic_error("root_indices: Cartan generator has no root indices");
}

Generator adjoint(Generator g) {
  if (!is_root_generator(g)) return g;
  auto [i, j] = root_indices(g);
  return root_generator(j, i);
}

std::string_view name(Generator g) {
  switch (g) {
    case Generator::S12: return "S12";
    case Generator::S13: return "S13";
    case Generator::S21: return "S21";
    case Generator::S23: return "S23";
    case Generator::S31: return "S31";
    case Generator::S32: return "S32";
    case Generator::T3: return "T3";
    case Generator::H2: return "H2";
  }
  return "?";
}

std::optional<Generator> parse_generator(std::string_view token) {
  for (Generator g : kAllGenerators) {
    if (name(g) == token) return g;
  }
  return std::nullopt;
}

std::array<std::array<int, 3>, 3> defining_matrix(Generator g) {
  std::array<std::array<int, 3>, 3> m{};
  if (g == Generator::T3) {
    m[0][0] = 1;
    m[2][2] = -1;
  } else if (g == Generator::H2) {
    m[1][1] = 1;
    m[2][2] = -1;
  } else {
    auto [i, j] = root_indices(g);
    m[i - 1][j - 1] = 1;
  }
  return m;
}

ExprF to_float(const Expr& e) {
  ExprF out;
  for (const auto& [w, c] : e.terms()) {
    out.add_term(w, {c.re.to_double(), c.im.to_double()});
  }
  return out;
}

bool has_real_coefficients(const Expr& e) {
  for (const auto& [w, c] : e.terms()) {
    if (!c.is_real()) return false;
  }
  return true;
}

std::string to_string(const Expr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    std::string coeff;
    if (c.is_real()) {
      Rational r = c.re;
      if (!first) out += r.num() < 0 ? " - " : " + ";
      else if (r.num() < 0) out += "-";
      coeff = abs(r).to_string();
    } else {
      if (!first) out += " + ";
      coeff = "(" + c.re.to_string() + (c.im.num() < 0 ? "-" : "+") + abs(c.im).to_string() + "i)";
    }
    out += coeff;
    for (Generator g : w) {
      out += "*";
      out += name(g);
    }
    first = false;
  }
  return out;
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("expression parse error at offset " + std::to_string(pos_) + ": " + what +
                      " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_sum() {
    Expr total;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    while (true) {
      Expr t = parse_product();
      if (negate) total -= t;
      else total += t;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else break;
    }
    return total;
  }

  Expr parse_product() {
    Expr e = parse_power();
    while (accept('*')) e = e * parse_power();
    return e;
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent after '^'");
    int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
    Expr out = Expr::scalar(1);
    for (int i = 0; i < n; ++i) out = out * base;
    return out;
  }

  Expr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      Rational value = parse_number();
      if (pos_ < text_.size() && text_[pos_] == 'i') {
        ++pos_;
        return Expr::scalar(ComplexRational(Rational(0), value));
      }
      return Expr::scalar(ComplexRational(value));
    }
    if (c == 'i' && !is_ident_char(pos_ + 1)) {
      ++pos_;
      return Expr::scalar(ComplexRational(Rational(0), Rational(1)));
    }
    std::size_t start = pos_;
    while (is_ident_char(pos_)) ++pos_;
    if (start == pos_) fail("unexpected '" + std::string(1, c) + "'");
    std::string_view token = text_.substr(start, pos_ - start);
    auto g = parse_generator(token);
    if (!g) {
      pos_ = start;
      fail("unknown generator '" + std::string(token) + "'");
    }
    return Expr::generator(*g);
  }

  bool is_ident_char(std::size_t at) const {
    return at < text_.size() && std::isalnum(static_cast<unsigned char>(text_[at]));
  }

  Rational parse_number() {
    std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      digits();
    }
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      digits();
    }
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const std::domain_error& e) {
      fail(e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

Expr lipkin_hamiltonian(const Rational& a, const Rational& b) {
  Expr e = Expr::generator(Generator::T3, ComplexRational(a));
  for (Generator g : kRootGenerators) e += Expr::word(Word{g, g}, ComplexRational(b));
  return e;
}

}  // namespace su3ray
