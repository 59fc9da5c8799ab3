#ifndef TOGGLELAB_MATRIX_HPP
#define TOGGLELAB_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "togglelab/rational.hpp"

namespace tgl {

/// Dense matrix over Q with exact row reduction. Row-major, value type.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, QVector(cols)) {}

  static QMatrix from_rows(std::vector<QVector> rows);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

  QVector& row(std::size_t r) { return rows_[r]; }
  const QVector& row(std::size_t r) const { return rows_[r]; }
  const std::vector<QVector>& rows() const { return rows_; }

  void append_row(QVector v);

  QMatrix transposed() const;

  /// In-place reduced row echelon form. Pivot search walks columns left to
  /// right and picks the candidate row whose entry has the smallest absolute
  /// numerator (ties: lowest row index). Returns the pivot columns in order.
  std::vector<std::size_t> reduce();

  std::size_t rank() const;

  /// Basis of { x : M x = 0 }, one vector per free column, in free-column
  /// order. Exact.
  std::vector<QVector> nullspace() const;

private:
  std::size_t cols_ = 0;
  std::vector<QVector> rows_;
};

/// Exact determinant of a square integer matrix by fraction-free
/// (Bareiss) elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

} // namespace tgl

#endif
