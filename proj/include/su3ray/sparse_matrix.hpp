#pragma once

#include <cstddef>
#include <vector>

#include "su3ray/rational.hpp"

namespace su3ray {

struct MatrixEntry {
  std::size_t row;
  Rational value;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Square matrix with exact entries, stored column by column.
///
/// Each column is sorted by row index, holds no duplicate rows and no
/// explicit zeros.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  explicit SparseMatrix(std::size_t dim) : columns_(dim) {}

  static SparseMatrix identity(std::size_t dim);
  static SparseMatrix diagonal(const std::vector<Rational>& values);

  std::size_t dim() const { return columns_.size(); }
  const std::vector<MatrixEntry>& column(std::size_t col) const { return columns_.at(col); }

  /// Replaces a column. Entries may arrive unsorted; duplicates are summed and
  /// zeros dropped. Throws std::out_of_range for bad indices.
  void set_column(std::size_t col, std::vector<MatrixEntry> entries);

  Rational at(std::size_t row, std::size_t col) const;

  std::size_t nnz() const;
  std::size_t max_nnz_per_column() const;
  Rational max_abs_entry() const;
  bool is_zero() const { return nnz() == 0; }

  /// Dense copy in column-major order (dim*dim doubles).
  std::vector<double> to_dense_column_major() const;

  SparseMatrix& operator+=(const SparseMatrix& o);
  SparseMatrix& operator-=(const SparseMatrix& o);
  SparseMatrix& operator*=(const Rational& s);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(SparseMatrix a, const Rational& s) { return a *= s; }
  friend SparseMatrix operator*(const Rational& s, SparseMatrix a) { return a *= s; }
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::vector<std::vector<MatrixEntry>> columns_;
};

}  // namespace su3ray
