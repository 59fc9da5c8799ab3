#include "togglelab/matrix.hpp"

#include <cstdlib>
#include <utility>

#include "togglelab/error.hpp"

namespace tgl {

QMatrix QMatrix::from_rows(std::vector<QVector> rows) {
  QMatrix m;
  if (!rows.empty()) {
    m.cols_ = rows.front().size();
    for (const auto& r : rows)
      if (r.size() != m.cols_)
        fail(errc::bad_parameter, "ragged matrix rows");
  }
  m.rows_ = std::move(rows);
  return m;
}

void QMatrix::append_row(QVector v) {
  if (rows_.empty())
    cols_ = v.size();
  else if (v.size() != cols_)
    fail(errc::bad_parameter, "row length mismatch");
  rows_.push_back(std::move(v));
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t.rows_[c][r] = rows_[r][c];
  return t;
}

std::vector<std::size_t> QMatrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < cols_ && next_row < rows_.size(); ++col) {
    // Pivot: smallest absolute numerator among nonzero candidates.
    std::size_t best = rows_.size();
    for (std::size_t r = next_row; r < rows_.size(); ++r) {
      if (rows_[r][col] == 0)
        continue;
      if (best == rows_.size() ||
          mpz_cmpabs(rows_[r][col].get_num_mpz_t(),
                     rows_[best][col].get_num_mpz_t()) < 0)
        best = r;
    }
    if (best == rows_.size())
      continue;
    std::swap(rows_[next_row], rows_[best]);

    QVector& prow = rows_[next_row];
    const Rational inv = Rational(1) / prow[col];
    for (std::size_t c = col; c < cols_; ++c)
      prow[c] *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r == next_row || rows_[r][col] == 0)
        continue;
      const Rational factor = rows_[r][col];
      for (std::size_t c = col; c < cols_; ++c)
        rows_[r][c] -= factor * prow[c];
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

std::size_t QMatrix::rank() const {
  QMatrix copy = *this;
  return copy.reduce().size();
}

std::vector<QVector> QMatrix::nullspace() const {
  QMatrix reduced = *this;
  const std::vector<std::size_t> pivots = reduced.reduce();

  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots)
    is_pivot[p] = true;

  std::vector<QVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free])
      continue;
    QVector x(cols_, Rational(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x[pivots[r]] = -reduced.rows_[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      fail(errc::bad_parameter, "determinant of a non-square matrix");
  if (n == 0)
    return 1;

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0)
        ++swap_row;
      if (swap_row == n)
        return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

} // namespace tgl
