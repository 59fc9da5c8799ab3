#include <doctest.h>

#include <random>

#include "togglelab/error.hpp"
#include "togglelab/matrix.hpp"
#include "togglelab/spaces.hpp"
#include "togglelab/subspace.hpp"

using namespace tgl;

namespace {

QVector qv(std::initializer_list<int> values) {
  QVector v;
  for (int x : values)
    v.emplace_back(x);
  return v;
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                      std::size_t cols) {
  std::uniform_int_distribution<int> entry(-3, 3);
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = Rational(entry(rng));
  return m;
}

// Rank witness by exhibiting a nonsingular square minor, checked with the
// integer determinant; independent of the elimination path.
bool has_nonsingular_minor(const QMatrix& m, std::size_t k) {
  std::vector<std::size_t> row_pick(k), col_pick(k);
  const std::size_t rows = m.row_count(), cols = m.col_count();

  const auto det_of = [&]() {
    std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const Rational& q = m.at(row_pick[i], col_pick[j]);
        REQUIRE(q.get_den() == 1);
        minor[i][j] = q.get_num();
      }
    return bareiss_determinant(std::move(minor));
  };

  const auto choose = [&](auto&& self, std::vector<std::size_t>& pick,
                          std::size_t limit, std::size_t depth,
                          auto&& leaf) -> bool {
    if (depth == k)
      return leaf();
    const std::size_t start = depth == 0 ? 0 : pick[depth - 1] + 1;
    for (std::size_t i = start; i < limit; ++i) {
      pick[depth] = i;
      if (self(self, pick, limit, depth + 1, leaf))
        return true;
    }
    return false;
  };
  return choose(choose, row_pick, rows, 0, [&]() {
    return choose(choose, col_pick, cols, 0, [&]() { return det_of() != 0; });
  });
}

} // namespace

TEST_CASE("row reduction") {
  QMatrix m = QMatrix::from_rows({qv({1, 2, 3}), qv({2, 4, 6}), qv({0, 1, 1})});
  const auto pivots = m.reduce();
  CHECK(pivots == std::vector<std::size_t>{0, 1});
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 0); // reduced above the second pivot
  CHECK(m.rank() == 2);
}

TEST_CASE("nullspace") {
  const QMatrix m = QMatrix::from_rows({qv({1, 0, -1}), qv({0, 1, 2})});
  const auto basis = m.nullspace();
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == qv({1, -2, 1}));

  // A x = 0 for every basis vector, on random matrices
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const QMatrix a = random_matrix(rng, 4, 7);
    const auto null_basis = a.nullspace();
    CHECK(null_basis.size() == 7 - a.rank());
    for (const QVector& x : null_basis)
      for (std::size_t r = 0; r < a.row_count(); ++r) {
        Rational dot(0);
        for (std::size_t c = 0; c < a.col_count(); ++c)
          dot += a.at(r, c) * x[c];
        CHECK(dot == 0);
      }
  }
}

TEST_CASE("bareiss determinants") {
  CHECK(bareiss_determinant({{Integer(2), Integer(3)},
                             {Integer(4), Integer(5)}}) == -2);
  CHECK(bareiss_determinant({{Integer(1), Integer(2)},
                             {Integer(2), Integer(4)}}) == 0);
  CHECK(bareiss_determinant({{Integer(0), Integer(1)},
                             {Integer(1), Integer(0)}}) == -1);
  // needs a row swap in the middle of elimination
  CHECK(bareiss_determinant({{Integer(1), Integer(1), Integer(1)},
                             {Integer(1), Integer(1), Integer(2)},
                             {Integer(1), Integer(2), Integer(3)}}) == -1);
}

TEST_CASE("rank certified by a nonsingular minor") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const QMatrix m = random_matrix(rng, 4, 5);
    const std::size_t r = m.rank();
    if (r > 0)
      CHECK(has_nonsingular_minor(m, r));
    CHECK_FALSE(has_nonsingular_minor(m, r + 1));
  }
}

TEST_CASE("toggle vectors of the 2x2 rectangle have rank 4") {
  const IdealLattice lattice =
      enumerate_ideals(Poset::from_diagram(Diagram::rectangle(2, 2)));
  std::vector<QVector> rows;
  for (int e = 0; e < 4; ++e)
    rows.push_back(as_vector(lattice, Statistic::toggle(e)));
  const QMatrix m = QMatrix::from_rows(rows);
  CHECK(m.rank() == 4);
  CHECK(has_nonsingular_minor(m, 4));
}

TEST_CASE("subspace span and membership") {
  Subspace s = Subspace::span(3, {qv({1, 0, 1}), qv({0, 1, 1}),
                                  qv({1, 1, 2})});
  CHECK(s.dim() == 2);
  CHECK(s.ambient_dim() == 3);
  CHECK(s.contains(qv({2, 3, 5})));
  CHECK_FALSE(s.contains(qv({1, 0, 0})));

  CHECK(Subspace::span(3, {qv({0, 0, 0})}).dim() == 0);
  CHECK_THROWS_AS(Subspace::span(3, {qv({1, 0})}), error);
}

TEST_CASE("subspace intersection") {
  const Subspace a = Subspace::span(3, {qv({1, 0, 0}), qv({0, 1, 0})});
  const Subspace b = Subspace::span(3, {qv({0, 1, 0}), qv({0, 0, 1})});
  const Subspace meet = intersect(a, b);
  CHECK(meet.dim() == 1);
  CHECK(meet.contains(qv({0, 1, 0})));

  // identical spaces intersect to themselves; disjoint spans to zero
  CHECK(intersection_dim(a, a) == a.dim());
  const Subspace c = Subspace::span(3, {qv({0, 0, 1})});
  CHECK(intersection_dim(a, c) == 0);

  const Subspace other = Subspace::span(4, {qv({1, 0, 0, 0})});
  CHECK_THROWS_AS(intersect(a, other), error);
}

TEST_CASE("intersection dimension identity on random spans") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const QMatrix ma = random_matrix(rng, 3, 6);
    const QMatrix mb = random_matrix(rng, 2, 6);
    const Subspace a = Subspace::span(6, ma.rows());
    const Subspace b = Subspace::span(6, mb.rows());
    const Subspace meet = intersect(a, b);
    CHECK(meet.dim() + sum(a, b).dim() == a.dim() + b.dim());
    for (const QVector& v : meet.basis()) {
      CHECK(a.contains(v));
      CHECK(b.contains(v));
    }
  }
}
