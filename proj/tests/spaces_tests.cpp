#include <doctest.h>

#include <map>
#include <set>

#include "togglelab/error.hpp"
#include "togglelab/spaces.hpp"

using namespace tgl;

namespace {

IdealLattice lattice_of(const Diagram& d) {
  return enumerate_ideals(Poset::from_diagram(d));
}

// (support cells of the toggle part, constant term) of a basis statistic
std::pair<std::set<Cell>, Rational> toggle_shape(const Poset& p,
                                                 const Statistic& f) {
  std::set<Cell> support;
  for (const auto& [key, coeff] : f.terms()) {
    if (key_kind(key) == GenKind::toggle) {
      CHECK(coeff == 1);
      support.insert(p.label(key_element(key)));
    } else {
      CHECK(key_kind(key) == GenKind::constant);
    }
  }
  return {support, f.coefficient(GenKind::constant, 0)};
}

std::map<Cell, Rational> indicator_shape(const Poset& p, const Statistic& f) {
  std::map<Cell, Rational> support;
  for (const auto& [key, coeff] : f.terms()) {
    REQUIRE(key_kind(key) == GenKind::ideal_indicator);
    support[p.label(key_element(key))] = coeff;
  }
  return support;
}

} // namespace

TEST_CASE("indicator spans have full rank") {
  for (const Diagram& d :
       {Diagram::rectangle(2, 3), Diagram::type_b_root(2),
        Diagram::shifted_staircase(3)}) {
    const IdealLattice lattice = lattice_of(d);
    CHECK(indicator_span(lattice).dim() ==
          static_cast<std::size_t>(lattice.poset().size()));
    CHECK(toggle_constant_span(lattice).dim() ==
          static_cast<std::size_t>(lattice.poset().size()) + 1);
  }
  CHECK(span_of(lattice_of(Diagram::rectangle(2, 2)), {Statistic()}).dim() ==
        0);
}

TEST_CASE("published dimensions of the four families") {
  CHECK(dim_it(lattice_of(Diagram::rectangle(3, 4))) == 6);
  CHECK(dim_at(lattice_of(Diagram::rectangle(3, 4))) == 6);
  CHECK(dim_it(lattice_of(Diagram::type_a_root(5))) == 5);
  CHECK(dim_at(lattice_of(Diagram::shifted_staircase(4))) == 7);
  CHECK(dim_at(lattice_of(Diagram::type_b_root(3))) == 5);
  CHECK(dim_it(lattice_of(Diagram::ferrers(Partition({5, 2, 1, 1})))) == 6);
  CHECK(dim_at(lattice_of(Diagram::ferrers(Partition({5, 2, 1, 1})))) == 6);
  CHECK(dim_it(lattice_of(Diagram::from_text("#"))) == 1);
}

TEST_CASE("toggle decomposition of the diagonal statistic") {
  const IdealLattice lattice = lattice_of(Diagram::rectangle(3, 4));
  const Poset& p = lattice.poset();

  Statistic f = Statistic::constant(Rational(-1));
  for (const Cell c : {Cell{1, 1}, Cell{2, 2}, Cell{3, 3}})
    f += Statistic::toggle(p.element_at(c));

  const ToggleDecomposition dec = decompose_toggle(lattice, as_vector(lattice, f));
  CHECK(dec.constant == -1);
  for (int e = 0; e < p.size(); ++e) {
    const Cell c = p.label(e);
    CHECK(dec.coeffs[e] == (c.row == c.col ? 1 : 0));
  }
  // reconstruction reproduces the vector exactly
  CHECK(as_vector(lattice, dec.to_statistic()) == as_vector(lattice, f));

  // the all-ones vector is the bare constant
  const ToggleDecomposition ones =
      decompose_toggle(lattice, QVector(lattice.size(), Rational(1)));
  CHECK(ones.constant == 1);
  for (const Rational& c : ones.coeffs)
    CHECK(c == 0);
}

TEST_CASE("decomposition rejects vectors outside the span") {
  // indicators are not homomesic, so they cannot be toggle combinations
  const IdealLattice lattice = lattice_of(Diagram::rectangle(2, 2));
  const QVector v = as_vector(lattice, Statistic::indicator(0));
  CHECK_THROWS_AS(decompose_toggle(lattice, v), error);
  try {
    decompose_toggle(lattice, v);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_in_span);
  }
}

TEST_CASE("diamond check on the worked example") {
  const Diagram d = Diagram::from_text("..###\n.#####\n##");
  const Poset p = Poset::from_diagram(d);
  const int p1 = p.element_at({1, 3});
  const int p2 = p.element_at({2, 3});
  const int p3 = p.element_at({1, 4});
  const int p4 = p.element_at({2, 4});

  const DiamondCheck check = check_diamond(p, p1, p2, p3, p4);
  const auto mask_of = [&p](std::initializer_list<Cell> cells) {
    ElementMask m = 0;
    for (const Cell c : cells)
      m |= ElementMask(1) << p.element_at(c);
    return m;
  };
  CHECK(check.s1 == mask_of({{3, 1}, {2, 2}, {1, 4}}));
  CHECK(check.s2 == mask_of({{3, 1}, {1, 4}}));
  CHECK(check.s3 == mask_of({{3, 1}, {2, 2}, {1, 5}}));
  CHECK(check.s23 == mask_of({{3, 1}, {1, 5}, {2, 4}}));
  CHECK(check.s2_minus_s1 == 0);
  CHECK(check.s3_minus_s1 == mask_of({{1, 5}}));
  CHECK(check.hypotheses_hold);
  CHECK(check.primes_hold);
  CHECK(check.conditions_agree);
}

TEST_CASE("diamond check on rectangles and non-diamonds") {
  const Poset p = Poset::from_diagram(Diagram::rectangle(3, 3));
  const DiamondCheck check = check_diamond(
      p, p.element_at({1, 1}), p.element_at({2, 1}), p.element_at({1, 2}),
      p.element_at({2, 2}));
  CHECK(check.hypotheses_hold);

  CHECK_THROWS_AS(check_diamond(p, p.element_at({1, 1}), p.element_at({2, 1}),
                                p.element_at({1, 2}), p.element_at({3, 3})),
                  error);
  CHECK_THROWS_AS(check_diamond(p, 0, 1, 1, 4), error);
}

TEST_CASE("stated and derived diamond conditions agree on family diamonds") {
  for (const Diagram& d :
       {Diagram::rectangle(3, 4), Diagram::shifted_staircase(4),
        Diagram::type_a_root(4), Diagram::type_b_root(3)}) {
    const Poset p = Poset::from_diagram(d);
    for (int a = 0; a < p.size(); ++a)
      for (int b : p.upper_covers(a))
        for (int c : p.upper_covers(a)) {
          if (b >= c)
            continue;
          for (int top : p.upper_covers(b)) {
            if (!((p.upper_cover_mask(c) >> top) & 1u))
              continue;
            const DiamondCheck check = check_diamond(p, a, b, c, top);
            CHECK(check.conditions_agree);
            CHECK(check.hypotheses_hold); // convex connected diagrams
          }
        }
  }
}

TEST_CASE("root-zero configurations") {
  const Diagram fig = Diagram::from_text("..#\n..#\n###");
  const Poset p = Poset::from_diagram(fig);
  CHECK(check_root_zero(p, p.element_at({3, 3}), p.element_at({3, 2}),
                        p.element_at({2, 3})));

  // shared minimum below both covers
  const Poset r = Poset::from_diagram(Diagram::rectangle(2, 2));
  CHECK_FALSE(check_root_zero(r, r.element_at({2, 2}), r.element_at({1, 2}),
                              r.element_at({2, 1})));

  // the second anti-diagonal of the type A root poset
  const Diagram da4 = Diagram::type_a_root(4);
  const Poset a4 = Poset::from_diagram(da4);
  for (const Cell& c : da4.cells())
    if (c.row + c.col == 6)
      CHECK(check_root_zero(a4, a4.element_at(c),
                            a4.element_at({c.row - 1, c.col}),
                            a4.element_at({c.row, c.col - 1})));
}

TEST_CASE("diagonal statistics of the 3x4 rectangle") {
  const Diagram d = Diagram::rectangle(3, 4);
  const Poset p = Poset::from_diagram(d);
  const IdealLattice lattice = enumerate_ideals(p);

  const DiagonalStatistic f0 = diagonal_statistic(d, p, 0);
  CHECK(f0.constant_added);
  CHECK(f0.statistic.coefficient(GenKind::constant, 0) == -1);
  CHECK(f0.statistic.coefficient(GenKind::toggle, p.element_at({2, 2})) == 1);

  const DiagonalStatistic fm2 = diagonal_statistic(d, p, -2);
  CHECK_FALSE(fm2.constant_added);
  Statistic expected = Statistic::toggle(p.element_at({1, 3}));
  expected += Statistic::toggle(p.element_at({2, 4}));
  CHECK(fm2.statistic == expected);

  // each f_k equals its indicator form g_k, hence lies in span(1_p)
  const Subspace ind = indicator_span(lattice);
  for (int k : {1, 0, -1, -2}) {
    const DiagonalStatistic fk = diagonal_statistic(d, p, k);
    CHECK(as_vector(lattice, fk.statistic) ==
          as_vector(lattice, diagonal_indicator_form(p, k)));
    CHECK(ind.contains(as_vector(lattice, fk.statistic)));
  }

  // the corner diagonals have an empty neighbor: condition (i)
  CHECK_THROWS_AS(diagonal_statistic(d, p, 2), error);
  try {
    diagonal_statistic(d, p, 2);
  } catch (const error& e) {
    CHECK(e.code() == errc::conditions_fail);
    CHECK(std::string(e.what()).find("(i)") != std::string::npos);
  }
}

TEST_CASE("diagonal closure condition on the type B poset") {
  const Diagram d = Diagram::type_b_root(3);
  const Poset p = Poset::from_diagram(d);

  // the odd diagonal k=1 violates the closure biconditional
  try {
    diagonal_statistic(d, p, 1);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::conditions_fail);
    CHECK(std::string(e.what()).find("(ii)") != std::string::npos);
  }

  // the even diagonal k=2 passes and meets a minimal element
  const DiagonalStatistic f2 = diagonal_statistic(d, p, 2);
  CHECK(f2.constant_added);
  const IdealLattice lattice = enumerate_ideals(p);
  CHECK(as_vector(lattice, f2.statistic) ==
        as_vector(lattice, diagonal_indicator_form(p, 2)));
}

TEST_CASE("family parsing") {
  CHECK(parse_family("rect") == Family::rectangle);
  CHECK(parse_family("RECTANGLE") == Family::rectangle);
  CHECK(parse_family("typeB") == Family::type_b);
  CHECK_THROWS_AS(parse_family("hexagon"), error);
}

TEST_CASE("published bases for the type B example") {
  const Diagram d = Diagram::type_b_root(3);
  const IdealLattice lattice = lattice_of(d);
  const Poset& p = lattice.poset();

  // first basis: toggle supports and constants, panel by panel
  const std::vector<Statistic> b1 = basis_b1(Family::type_b, 0, 3, p);
  REQUIRE(b1.size() == 5);
  std::set<std::pair<std::set<Cell>, Rational>> shapes;
  for (const Statistic& f : b1)
    shapes.insert(toggle_shape(p, f));
  const std::set<std::pair<std::set<Cell>, Rational>> expected = {
      {{Cell{5, 1}}, Rational(-1)},
      {{Cell{4, 2}, Cell{5, 3}}, Rational(-1)},
      {{Cell{3, 3}}, Rational(-1)},
      {{Cell{4, 4}}, Rational(0)},
      {{Cell{5, 5}}, Rational(0)},
  };
  CHECK(shapes == expected);

  // second basis: indicator coefficient maps, panel by panel
  const std::vector<Statistic> b2 = basis_b2(Family::type_b, 0, 3, p);
  REQUIRE(b2.size() == 5);
  std::set<std::map<Cell, Rational>> maps;
  for (const Statistic& f : b2)
    maps.insert(indicator_shape(p, f));
  const std::set<std::map<Cell, Rational>> expected2 = {
      {{Cell{5, 1}, Rational(2)}, {Cell{5, 2}, Rational(-1)}},
      {{Cell{4, 2}, Rational(2)},
       {Cell{5, 3}, Rational(2)},
       {Cell{5, 2}, Rational(-1)},
       {Cell{4, 3}, Rational(-1)},
       {Cell{5, 4}, Rational(-1)}},
      {{Cell{3, 3}, Rational(2)}, {Cell{4, 3}, Rational(-1)}},
      {{Cell{4, 4}, Rational(2)},
       {Cell{4, 3}, Rational(-1)},
       {Cell{5, 4}, Rational(-1)}},
      {{Cell{5, 5}, Rational(2)}, {Cell{5, 4}, Rational(-1)}},
  };
  CHECK(maps == expected2);

  // both collections are bases of the intersection space
  const Subspace it_space = ideal_toggle_space(lattice);
  CHECK(it_space.dim() == 5);
  for (const auto& basis : {b1, b2}) {
    std::vector<QVector> vectors;
    for (const Statistic& f : basis) {
      vectors.push_back(as_vector(lattice, f));
      CHECK(it_space.contains(vectors.back()));
    }
    CHECK(QMatrix::from_rows(vectors).rank() == 5);
  }
}

TEST_CASE("second basis of the 2x2 rectangle") {
  const IdealLattice lattice = lattice_of(Diagram::rectangle(2, 2));
  const Poset& p = lattice.poset();
  const std::vector<Statistic> b2 = basis_b2(Family::rectangle, 2, 2, p);
  REQUIRE(b2.size() == 3);
  const Subspace it_space = ideal_toggle_space(lattice);
  for (const Statistic& f : b2) {
    for (const auto& [key, coeff] : f.terms()) {
      CHECK(key_kind(key) == GenKind::ideal_indicator);
      CHECK(coeff == 1);
    }
    CHECK(it_space.contains(as_vector(lattice, f)));
  }
}

TEST_CASE("tridiagonal determinants") {
  CHECK(tridiagonal_det(2) == 3);
  CHECK(tridiagonal_det(3) == -4);
  for (int ell = 2; ell <= 12; ++ell) {
    Integer expected(ell + 1);
    if (ell % 2 != 0)
      expected = -expected;
    CHECK(tridiagonal_det(ell) == expected);
  }
  for (int ell = 4; ell <= 12; ++ell)
    CHECK(tridiagonal_det(ell) ==
          Integer(-2) * tridiagonal_det(ell - 1) - tridiagonal_det(ell - 2));
  CHECK_THROWS_AS(tridiagonal_det(1), error);
}

TEST_CASE("intersection membership is exactly the two span memberships") {
  const IdealLattice lattice = lattice_of(Diagram::rectangle(3, 3));
  const Subspace toggles = toggle_constant_span(lattice);
  const Subspace indicators = indicator_span(lattice);
  const Subspace it_space = ideal_toggle_space(lattice);
  for (const QVector& v : it_space.basis()) {
    CHECK(toggles.contains(v));
    CHECK(indicators.contains(v));
  }
  const Subspace at_space = antichain_toggle_space(lattice);
  const Subspace antichains = antichain_indicator_span(lattice);
  for (const QVector& v : at_space.basis()) {
    CHECK(toggles.contains(v));
    CHECK(antichains.contains(v));
  }
}

TEST_CASE("intersection basis vectors are 0-mesic up to their constant") {
  for (const Diagram& d :
       {Diagram::rectangle(3, 3), Diagram::type_b_root(2),
        Diagram::shifted_staircase(3)}) {
    const IdealLattice lattice = lattice_of(d);
    const Subspace it_space = ideal_toggle_space(lattice);
    for (const QVector& v : it_space.basis()) {
      const ToggleDecomposition dec = decompose_toggle(lattice, v);
      Statistic f = dec.to_statistic();
      f -= Statistic::constant(dec.constant);
      CHECK(is_d_mesic(lattice, f, Rational(0)));
      CHECK(is_d_mesic(lattice, dec.to_statistic(), dec.constant));
    }
  }
}

TEST_CASE("diagonal bijection image of the running partition") {
  // border strip diagonals of (5,2,1,1) are exactly -4..3
  const BorderStrip strip = border_strip(Partition({5, 2, 1, 1}));
  std::set<int> image;
  for (const Cell& c : strip.cells)
    image.insert(c.row - c.col);
  CHECK(image == std::set<int>{-4, -3, -2, -1, 0, 1, 2, 3});
}

TEST_CASE("partition dimension formula") {
  const PartitionDims named = partition_dims(Partition({5, 2, 1, 1}));
  CHECK(named.border_cells == 8);
  CHECK(named.corner_cells == 2);
  CHECK(named.formula == 6);
  CHECK(named.dim_it == 6);
  CHECK(named.dim_at == 6);
  CHECK(named.match);

  const PartitionDims single = partition_dims(Partition({1}));
  CHECK(single.formula == 1);
  CHECK(single.match);

  for (const Partition& lambda : Partition::all_with_at_most(7))
    CHECK(partition_dims(lambda).match);
}
