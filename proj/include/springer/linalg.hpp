#pragma once

// Dense exact linear algebra over Q. Matrices here stay small (a few hundred
// rows at most), so a plain row-major vector-of-vectors is enough.

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace springer::linalg {

using Rational = mpq_class;
using Row = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, Row(cols)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::vector<Row> rows, std::size_t cols);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r][c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r][c]; }

  const Row& row(std::size_t r) const { return data_[r]; }
  void append_row(Row r);

  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const;

  Rational trace() const;
  bool is_integral() const;

 private:
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

struct Echelon {
  Matrix reduced;                  // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row of `reduced`
};

// Reduced row echelon form with pivots searched left to right.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// True iff the two row sets span the same subspace.
bool same_row_space(const Matrix& a, const Matrix& b);

// Expresses vectors in the span of a fixed independent family of rows.
// Throws if the family is dependent.
class SpanSolver {
 public:
  explicit SpanSolver(const Matrix& basis_rows);

  std::size_t dimension() const { return transform_.rows(); }

  // Coefficients c with v = sum_j c_j * basis_j, or nullopt when v is outside
  // the span.
  std::optional<Row> solve(const Row& v) const;

 private:
  Echelon echelon_;
  Matrix transform_;  // transform_ * basis = echelon_.reduced
};

// Sparse rows kept in echelon form one insertion at a time. Pivot rows have
// leading coefficient 1 at their smallest column.
using SparseRow = std::map<std::size_t, Rational>;

class SparseEchelon {
 public:
  // Adds r to the span; returns false when r was already in it.
  bool insert(SparseRow r);
  // Subtracts pivot rows to clear every pivot column below `limit`.
  SparseRow reduce(SparseRow r, std::size_t limit = std::numeric_limits<std::size_t>::max()) const;
  std::size_t rank() const { return pivots_.size(); }
  bool has_pivot(std::size_t c) const { return pivots_.count(c) != 0; }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace springer::linalg
