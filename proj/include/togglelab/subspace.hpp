#ifndef TOGGLELAB_SUBSPACE_HPP
#define TOGGLELAB_SUBSPACE_HPP

#include <cstddef>
#include <vector>

#include "togglelab/matrix.hpp"
#include "togglelab/rational.hpp"

namespace tgl {

/// A linear subspace of Q^ambient represented by its reduced-row-echelon
/// basis. Immutable after construction.
class Subspace {
public:
  Subspace() = default;

  static Subspace span(std::size_t ambient, std::vector<QVector> generators);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }

  /// RREF basis rows, pivot columns strictly increasing.
  const std::vector<QVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const QVector& v) const;

  /// Residual of v after eliminating against the basis; zero iff contained.
  QVector reduce_against(QVector v) const;

  friend Subspace sum(const Subspace& a, const Subspace& b);

  /// Explicit intersection via the stacked-system nullspace: vectors
  /// x = alpha^T A = beta^T B found from the left-kernel of [A; -B].
  /// The result's dimension always satisfies
  ///   dim(A∩B) = dim A + dim B − dim(A+B),
  /// which is re-verified on every call. Throws ambient_mismatch.
  friend Subspace intersect(const Subspace& a, const Subspace& b);

private:
  std::size_t ambient_ = 0;
  std::vector<QVector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
std::size_t intersection_dim(const Subspace& a, const Subspace& b);

} // namespace tgl

#endif
