#include "togglelab/subspace.hpp"

#include <cassert>
#include <utility>

#include "togglelab/error.hpp"

namespace tgl {

Subspace Subspace::span(std::size_t ambient, std::vector<QVector> generators) {
  for (const auto& g : generators)
    if (g.size() != ambient)
      fail(errc::ambient_mismatch, "generator length differs from ambient");
  QMatrix m = QMatrix::from_rows(std::move(generators));
  std::vector<std::size_t> pivots = m.reduce();

  Subspace s;
  s.ambient_ = ambient;
  s.pivots_ = std::move(pivots);
  for (std::size_t r = 0; r < s.pivots_.size(); ++r)
    s.basis_.push_back(m.row(r));
  return s;
}

QVector Subspace::reduce_against(QVector v) const {
  if (v.size() != ambient_)
    fail(errc::ambient_mismatch, "vector length differs from ambient");
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Rational& coeff = v[pivots_[r]];
    if (coeff == 0)
      continue;
    const Rational factor = coeff;
    for (std::size_t c = 0; c < ambient_; ++c)
      v[c] -= factor * basis_[r][c];
  }
  return v;
}

bool Subspace::contains(const QVector& v) const {
  return is_zero_vector(reduce_against(v));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_)
    fail(errc::ambient_mismatch, "subspace sum over different ambients");
  std::vector<QVector> gens = a.basis_;
  gens.insert(gens.end(), b.basis_.begin(), b.basis_.end());
  return Subspace::span(a.ambient_, std::move(gens));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_)
    fail(errc::ambient_mismatch, "subspace intersection over different ambients");
  const std::size_t n = a.ambient_;
  const std::size_t ra = a.dim();
  const std::size_t rb = b.dim();

  // x in A∩B  <=>  x = alpha^T A = beta^T B  <=>  (alpha, beta) in the
  // kernel of the n x (ra+rb) system A^T alpha - B^T beta = 0.
  QMatrix k(n, ra + rb);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < ra; ++j)
      k.at(i, j) = a.basis_[j][i];
    for (std::size_t j = 0; j < rb; ++j)
      k.at(i, ra + j) = -b.basis_[j][i];
  }

  std::vector<QVector> vectors;
  for (const QVector& null_vec : k.nullspace()) {
    QVector x(n, Rational(0));
    for (std::size_t j = 0; j < ra; ++j) {
      if (null_vec[j] == 0)
        continue;
      for (std::size_t c = 0; c < n; ++c)
        x[c] += null_vec[j] * a.basis_[j][c];
    }
    vectors.push_back(std::move(x));
  }
  Subspace result = Subspace::span(n, std::move(vectors));

  // dim(A∩B) = dim A + dim B - dim(A+B), re-derived independently.
  assert(result.dim() + sum(a, b).dim() == ra + rb);
  return result;
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
  return intersect(a, b).dim();
}

} // namespace tgl
