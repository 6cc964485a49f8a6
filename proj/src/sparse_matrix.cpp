#include "su3ray/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace su3ray {

namespace {

std::vector<MatrixEntry> merge_columns(const std::vector<MatrixEntry>& a,
                                       const std::vector<MatrixEntry>& b, const Rational& b_sign) {
  std::vector<MatrixEntry> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->row < ib->row)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->row < ia->row) {
      out.push_back({ib->row, b_sign * ib->value});
      ++ib;
    } else {
      Rational v = ia->value + b_sign * ib->value;
      if (!v.is_zero()) out.push_back({ia->row, v});
      ++ia;
      ++ib;
    }
  }
  return out;
}

void check_same_dim(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sparse matrix dimension mismatch");
}

}  // namespace

SparseMatrix SparseMatrix::identity(std::size_t dim) {
  return diagonal(std::vector<Rational>(dim, Rational(1)));
}

SparseMatrix SparseMatrix::diagonal(const std::vector<Rational>& values) {
  SparseMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].is_zero()) m.columns_[i].push_back({i, values[i]});
  }
  return m;
}

void SparseMatrix::set_column(std::size_t col, std::vector<MatrixEntry> entries) {
  if (col >= dim()) throw std::out_of_range("column index out of range");
  std::sort(entries.begin(), entries.end(),
            [](const MatrixEntry& x, const MatrixEntry& y) { return x.row < y.row; });
  std::vector<MatrixEntry> merged;
  merged.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.row >= dim()) throw std::out_of_range("row index out of range");
    if (!merged.empty() && merged.back().row == e.row) merged.back().value += e.value;
    else merged.push_back(e);
  }
  std::erase_if(merged, [](const MatrixEntry& e) { return e.value.is_zero(); });
  columns_[col] = std::move(merged);
}

Rational SparseMatrix::at(std::size_t row, std::size_t col) const {
  const auto& c = columns_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const MatrixEntry& e, std::size_t r) { return e.row < r; });
  return it != c.end() && it->row == row ? it->value : Rational(0);
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

std::size_t SparseMatrix::max_nnz_per_column() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n = std::max(n, c.size());
  return n;
}

Rational SparseMatrix::max_abs_entry() const {
  Rational m(0);
  for (const auto& c : columns_) {
    for (const auto& e : c) m = std::max(m, abs(e.value));
  }
  return m;
}

std::vector<double> SparseMatrix::to_dense_column_major() const {
  const std::size_t n = dim();
  std::vector<double> dense(n * n, 0.0);
  for (std::size_t col = 0; col < n; ++col) {
    for (const auto& e : columns_[col]) dense[col * n + e.row] = e.value.to_double();
  }
  return dense;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) {
  check_same_dim(*this, o);
  for (std::size_t c = 0; c < dim(); ++c) columns_[c] = merge_columns(columns_[c], o.columns_[c], Rational(1));
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& o) {
  check_same_dim(*this, o);
  for (std::size_t c = 0; c < dim(); ++c) columns_[c] = merge_columns(columns_[c], o.columns_[c], Rational(-1));
  return *this;
}

SparseMatrix& SparseMatrix::operator*=(const Rational& s) {
  if (s.is_zero()) {
    for (auto& c : columns_) c.clear();
    return *this;
  }
  for (auto& c : columns_) {
    for (auto& e : c) e.value *= s;
  }
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  check_same_dim(a, b);
  SparseMatrix out(a.dim());
  for (std::size_t col = 0; col < b.dim(); ++col) {
    std::map<std::size_t, Rational> acc;
    for (const auto& eb : b.columns_[col]) {
      for (const auto& ea : a.columns_[eb.row]) acc[ea.row] += ea.value * eb.value;
    }
    std::vector<MatrixEntry> entries;
    for (const auto& [row, v] : acc) {
      if (!v.is_zero()) entries.push_back({row, v});
    }
    out.columns_[col] = std::move(entries);
  }
  return out;
}

}  // namespace su3ray
