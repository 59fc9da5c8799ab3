#include "togglelab/spaces.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>

#include "togglelab/error.hpp"

namespace tgl {

Subspace span_of(const IdealLattice& lattice,
                 const std::vector<Statistic>& generators) {
  std::vector<QVector> vectors;
  vectors.reserve(generators.size());
  for (const Statistic& g : generators)
    vectors.push_back(as_vector(lattice, g));
  return Subspace::span(lattice.size(), std::move(vectors));
}

namespace {

std::vector<Statistic> per_element(const IdealLattice& lattice, GenKind kind) {
  std::vector<Statistic> gens;
  for (int e = 0; e < lattice.poset().size(); ++e)
    gens.push_back(Statistic::generator(kind, e));
  return gens;
}

} // namespace

Subspace indicator_span(const IdealLattice& lattice) {
  return span_of(lattice, per_element(lattice, GenKind::ideal_indicator));
}

Subspace antichain_indicator_span(const IdealLattice& lattice) {
  return span_of(lattice, per_element(lattice, GenKind::antichain_indicator));
}

Subspace toggle_constant_span(const IdealLattice& lattice) {
  std::vector<Statistic> gens = per_element(lattice, GenKind::toggle);
  gens.insert(gens.begin(), Statistic::constant(Rational(1)));
  return span_of(lattice, gens);
}

Subspace ideal_toggle_space(const IdealLattice& lattice) {
  return intersect(toggle_constant_span(lattice), indicator_span(lattice));
}

Subspace antichain_toggle_space(const IdealLattice& lattice) {
  return intersect(toggle_constant_span(lattice),
                   antichain_indicator_span(lattice));
}

std::size_t dim_it(const IdealLattice& lattice) {
  return ideal_toggle_space(lattice).dim();
}

std::size_t dim_at(const IdealLattice& lattice) {
  return antichain_toggle_space(lattice).dim();
}

Statistic ToggleDecomposition::to_statistic() const {
  Statistic f = Statistic::constant(constant);
  for (std::size_t e = 0; e < coeffs.size(); ++e)
    f.add_term(GenKind::toggle, static_cast<int>(e), coeffs[e]);
  return f;
}

ToggleDecomposition decompose_toggle(const IdealLattice& lattice,
                                     const QVector& v) {
  const std::size_t num_ideals = lattice.size();
  if (v.size() != num_ideals)
    fail(errc::ambient_mismatch, "vector is not indexed by this lattice");
  const int n = lattice.poset().size();
  const std::size_t k = static_cast<std::size_t>(n) + 1;

  // Generator rows: constant first, then the toggles in element order.
  std::vector<QVector> rows;
  rows.push_back(QVector(num_ideals, Rational(1)));
  for (int e = 0; e < n; ++e)
    rows.push_back(as_vector(lattice, Statistic::toggle(e)));

  // Unique coordinates need independent generators; witness any dependency.
  {
    QMatrix g = QMatrix::from_rows(rows);
    if (g.rank() != k) {
      const std::vector<QVector> kernel = g.transposed().nullspace();
      std::string witness = "dependency:";
      if (!kernel.empty()) {
        const QVector& y = kernel.front();
        if (y[0] != 0)
          witness += " " + to_string(y[0]) + "*CONST";
        for (std::size_t e = 1; e < k; ++e)
          if (y[e] != 0)
            witness += " " + to_string(y[e]) + "*T[" +
                       std::to_string(e - 1) + "]";
      }
      fail(errc::dependent_generators,
           "constant and toggle statistics are dependent; " + witness);
    }
  }

  // Solve G^T x = v through the augmented RREF.
  QMatrix aug(num_ideals, k + 1);
  for (std::size_t i = 0; i < num_ideals; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      aug.at(i, j) = rows[j][i];
    aug.at(i, k) = v[i];
  }
  const std::vector<std::size_t> pivots = aug.reduce();

  QVector x(k, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == k)
      fail(errc::not_in_span,
           "vector is outside span(constant, toggleability statistics)");
    x[pivots[r]] = aug.at(r, k);
  }

  ToggleDecomposition dec;
  dec.constant = x[0];
  dec.coeffs.assign(x.begin() + 1, x.end());
  return dec;
}

// ---------------------------------------------------------------------------
// Constraint checkers

namespace {

ElementMask principal_ideal(const Poset& p, int e) { return p.down_set(e); }

bool subset(ElementMask a, ElementMask b) { return !(a & ~b); }

} // namespace

DiamondCheck check_diamond(const Poset& p, int p1, int p2, int p3, int p4) {
  const int n = p.size();
  for (int e : {p1, p2, p3, p4})
    if (e < 0 || e >= n)
      fail(errc::bad_parameter, "diamond element out of range");
  const auto covers = [&p](int a, int b) {
    return (p.upper_cover_mask(a) >> b) & 1u;
  };
  if (p2 == p3 || !covers(p1, p2) || !covers(p1, p3) || !covers(p2, p4) ||
      !covers(p3, p4))
    fail(errc::not_a_diamond,
         "need p1 covered by p2 and p3, both covered by p4");

  DiamondCheck check;
  const ElementMask bit4 = ElementMask(1) << p4;
  check.s1 = min_of_complement(p, principal_ideal(p, p1));
  check.s2 = min_of_complement(p, principal_ideal(p, p2));
  check.s3 = min_of_complement(p, principal_ideal(p, p3));
  check.s23 =
      min_of_complement(p, principal_ideal(p, p2) | principal_ideal(p, p3));
  check.s2_minus_s1 = check.s2 & ~check.s1;
  check.s3_minus_s1 = check.s3 & ~check.s1;

  // (a) S2\S1, S3\S1 and {p4} inside S23.
  check.cond_a = subset(check.s2_minus_s1 | check.s3_minus_s1 | bit4, check.s23);
  // (b) S1 and S23\{p4} inside S2 ∪ S3.
  check.cond_b = subset(check.s1, check.s2 | check.s3) &&
                 subset(check.s23 & ~bit4, check.s2 | check.s3);
  // (c) S23 ∩ S1 = S2 ∩ S3.
  check.cond_c = (check.s23 & check.s1) == (check.s2 & check.s3);
  check.hypotheses_hold = check.cond_a && check.cond_b && check.cond_c;

  // The proof's derived system (a')-(d').
  const ElementMask core =
      check.s23 & ~(check.s2_minus_s1 | check.s3_minus_s1 | bit4);
  const ElementMask s2_cap_s1_extra = (check.s2 & check.s1) & ~check.s23;
  const ElementMask s3_cap_s1_extra = (check.s3 & check.s1) & ~check.s23;
  check.prime_a =
      (check.s2_minus_s1 | check.s3_minus_s1 | core | bit4) == check.s23;
  check.prime_b = (s2_cap_s1_extra | s3_cap_s1_extra | core) == check.s1;
  check.prime_c2 = (check.s2_minus_s1 | core | s2_cap_s1_extra) == check.s2;
  check.prime_c3 = (check.s3_minus_s1 | core | s3_cap_s1_extra) == check.s3;
  // (d') the six pieces are mutually disjoint.
  {
    const ElementMask pieces[] = {check.s2_minus_s1, check.s3_minus_s1, core,
                                  s2_cap_s1_extra, s3_cap_s1_extra, bit4};
    check.prime_d = true;
    int total = 0;
    ElementMask all = 0;
    for (ElementMask piece : pieces) {
      total += std::popcount(piece);
      all |= piece;
    }
    check.prime_d = (total == std::popcount(all));
  }
  check.primes_hold = check.prime_a && check.prime_b && check.prime_c2 &&
                      check.prime_c3 && check.prime_d;
  check.conditions_agree = (check.hypotheses_hold == check.primes_hold);
  return check;
}

bool check_root_zero(const Poset& p, int pp, int q1, int q2) {
  const int n = p.size();
  if (pp < 0 || pp >= n || q1 < 0 || q1 >= n || q2 < 0 || q2 >= n)
    return false;
  if (q1 == q2)
    return false;
  if (p.down_set(q1) & p.down_set(q2))
    return false;
  const auto covers = [&p](int a, int b) {
    return (p.upper_cover_mask(a) >> b) & 1u;
  };
  if (!covers(q1, pp) || !covers(q2, pp))
    return false;
  for (int r = 0; r < n; ++r)
    if (r != pp && covers(q1, r) && covers(q2, r))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Diagonal statistics and the published bases

namespace {

std::vector<int> diagonal_elements(const Poset& p, int k) {
  std::vector<int> cells;
  for (int e = 0; e < p.size(); ++e)
    if (p.label(e).row - p.label(e).col == k)
      cells.push_back(e);
  return cells;
}

} // namespace

DiagonalStatistic diagonal_statistic(const Diagram& d, const Poset& p, int k) {
  const DiagramPredicates preds = predicates(d);
  if (!preds.connected || !preds.row_convex || !preds.column_convex)
    fail(errc::predicate_fail,
         "diagonal statistics need a connected, row- and column-convex "
         "diagram");

  const auto diagonal_nonempty = [&d](int diag) {
    for (const Cell& c : d.cells())
      if (c.row - c.col == diag)
        return true;
    return false;
  };
  std::string failures;
  if (!(diagonal_nonempty(k) && diagonal_nonempty(k - 1) &&
        diagonal_nonempty(k + 1)))
    failures += "(i) diagonals k, k-1, k+1 must all be nonempty";

  // (ii) consecutive diagonal cells exist iff both off-diagonal neighbors
  // exist, as a biconditional over every position of the diagonal.
  bool closure_ok = true;
  bool saw_instance = false;
  for (int i = d.min_row() - 1; i <= d.max_row() + 1; ++i) {
    const int j = i - k;
    const bool lhs = d.contains(i, j) && d.contains(i + 1, j + 1);
    const bool rhs = d.contains(i, j + 1) && d.contains(i + 1, j);
    saw_instance = saw_instance || lhs || rhs;
    if (lhs != rhs) {
      closure_ok = false;
      break;
    }
  }
  if (!closure_ok) {
    if (!failures.empty())
      failures += "; ";
    failures += "(ii) diagonal closure biconditional fails";
  }
  if (!failures.empty())
    fail(errc::conditions_fail, failures);

  DiagonalStatistic result;
  result.vacuous_closure = !saw_instance;
  Statistic f;
  bool meets_min = false;
  for (int e : diagonal_elements(p, k)) {
    f += Statistic::toggle(e);
    if ((p.minimals() >> e) & 1u)
      meets_min = true;
  }
  if (meets_min) {
    f += Statistic::constant(Rational(-1));
    result.constant_added = true;
  }
  result.statistic = std::move(f);
  return result;
}

Statistic diagonal_indicator_form(const Poset& p, int k) {
  Statistic g;
  const std::vector<int> on_diag = diagonal_elements(p, k);
  for (int e : on_diag)
    g.add_term(GenKind::ideal_indicator, e, Rational(-2));
  // Q_k: cells of the adjacent diagonals in a cover relation with P_k.
  std::set<int> adjacent;
  for (int e : on_diag) {
    for (int q : p.upper_covers(e))
      adjacent.insert(q);
    for (int q : p.lower_covers(e))
      adjacent.insert(q);
  }
  for (int q : adjacent) {
    const int diag = p.label(q).row - p.label(q).col;
    if (diag == k - 1 || diag == k + 1)
      g.add_term(GenKind::ideal_indicator, q, Rational(1));
  }
  return g;
}

Family parse_family(const std::string& name) {
  std::string lowered;
  for (char c : name)
    lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lowered == "rect" || lowered == "rectangle")
    return Family::rectangle;
  if (lowered == "staircase")
    return Family::staircase;
  if (lowered == "typea")
    return Family::type_a;
  if (lowered == "typeb")
    return Family::type_b;
  fail(errc::unknown_family,
       "unknown family '" + name + "' (rect|staircase|typeA|typeB)");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::rectangle: return "rect";
    case Family::staircase: return "staircase";
    case Family::type_a: return "typeA";
    case Family::type_b: return "typeB";
  }
  return "?";
}

Diagram family_diagram(Family f, int m, int n) {
  switch (f) {
    case Family::rectangle: return Diagram::rectangle(m, n);
    case Family::staircase: return Diagram::shifted_staircase(n);
    case Family::type_a: return Diagram::type_a_root(n);
    case Family::type_b: return Diagram::type_b_root(n);
  }
  fail(errc::unknown_family, "bad family enum");
}

int family_predicted_dim(Family f, int m, int n) {
  switch (f) {
    case Family::rectangle: return m + n - 1;
    case Family::staircase: return 2 * n - 1;
    case Family::type_a: return n;
    case Family::type_b: return 2 * n - 1;
  }
  fail(errc::unknown_family, "bad family enum");
}

namespace {

int element_of(const Poset& p, int row, int col) {
  const int e = p.element_at({row, col});
  if (e < 0)
    fail(errc::bad_parameter, "basis cell (" + std::to_string(row) + "," +
                                  std::to_string(col) +
                                  ") is not in the poset");
  return e;
}

Statistic diagonal_toggle_sum(const Poset& p, int k) {
  Statistic f;
  for (int e : diagonal_elements(p, k))
    f += Statistic::toggle(e);
  return f;
}

Statistic diagonal_indicator_sum(const Poset& p, int k, const Rational& coeff) {
  Statistic f;
  for (int e : diagonal_elements(p, k))
    f.add_term(GenKind::ideal_indicator, e, coeff);
  return f;
}

} // namespace

std::vector<Statistic> basis_b1(Family f, int m, int n, const Poset& p) {
  std::vector<Statistic> basis;
  switch (f) {
    case Family::rectangle: {
      // one element per diagonal; the main diagonal carries the constant -1
      for (int k = 1 - n; k <= m - 1; ++k) {
        Statistic s = diagonal_toggle_sum(p, k);
        if (k == 0)
          s += Statistic::constant(Rational(-1));
        basis.push_back(std::move(s));
      }
      break;
    }
    case Family::staircase: {
      for (int k = 1 - n; k < 0; ++k)
        basis.push_back(diagonal_toggle_sum(p, k));
      for (int k = 2; k <= n; ++k)
        basis.push_back(Statistic::toggle(element_of(p, k, k)));
      Statistic first = Statistic::toggle(element_of(p, 1, 1));
      first += Statistic::constant(Rational(-1));
      basis.push_back(std::move(first));
      break;
    }
    case Family::type_a: {
      for (int k = 0; k <= n - 1; ++k) {
        Statistic s = Statistic::constant(Rational(-1));
        s += diagonal_toggle_sum(p, 2 * k + 1 - n);
        basis.push_back(std::move(s));
      }
      break;
    }
    case Family::type_b: {
      for (int k = 1; k <= n - 1; ++k) {
        Statistic s = Statistic::constant(Rational(-1));
        s += diagonal_toggle_sum(p, 2 * k);
        basis.push_back(std::move(s));
      }
      Statistic middle = Statistic::toggle(element_of(p, n, n));
      middle += Statistic::constant(Rational(-1));
      basis.push_back(std::move(middle));
      for (int i = n + 1; i <= 2 * n - 1; ++i)
        basis.push_back(Statistic::toggle(element_of(p, i, i)));
      break;
    }
  }
  return basis;
}

std::vector<Statistic> basis_b2(Family f, int m, int n, const Poset& p) {
  std::vector<Statistic> basis;
  switch (f) {
    case Family::rectangle: {
      for (int k = 1 - n; k <= m - 1; ++k)
        basis.push_back(diagonal_indicator_sum(p, k, Rational(1)));
      break;
    }
    case Family::staircase: {
      for (int k = 1 - n; k < 0; ++k)
        basis.push_back(diagonal_indicator_sum(p, k, Rational(1)));
      for (int i = 2; i < n; ++i) {
        Statistic s;
        s.add_term(GenKind::ideal_indicator, element_of(p, i, i), Rational(2));
        s.add_term(GenKind::ideal_indicator, element_of(p, i - 1, i),
                   Rational(-1));
        s.add_term(GenKind::ideal_indicator, element_of(p, i, i + 1),
                   Rational(-1));
        basis.push_back(std::move(s));
      }
      {
        Statistic s;
        s.add_term(GenKind::ideal_indicator, element_of(p, 1, 1), Rational(2));
        s.add_term(GenKind::ideal_indicator, element_of(p, 1, 2),
                   Rational(-1));
        basis.push_back(std::move(s));
      }
      {
        Statistic s;
        s.add_term(GenKind::ideal_indicator, element_of(p, n, n), Rational(2));
        s.add_term(GenKind::ideal_indicator, element_of(p, n - 1, n),
                   Rational(-1));
        basis.push_back(std::move(s));
      }
      break;
    }
    case Family::type_a: {
      for (int k = 0; k <= n - 1; ++k) {
        Statistic s = diagonal_indicator_sum(p, 2 * k + 1 - n, Rational(2));
        s += diagonal_indicator_sum(p, 2 * k + 2 - n, Rational(-1));
        s += diagonal_indicator_sum(p, 2 * k - n, Rational(-1));
        basis.push_back(std::move(s));
      }
      break;
    }
    case Family::type_b: {
      for (int k = 1; k <= n - 1; ++k) {
        Statistic s = diagonal_indicator_sum(p, 2 * k, Rational(2));
        s += diagonal_indicator_sum(p, 2 * k - 1, Rational(-1));
        s += diagonal_indicator_sum(p, 2 * k + 1, Rational(-1));
        basis.push_back(std::move(s));
      }
      for (int k = n + 1; k < 2 * n - 1; ++k) {
        Statistic s;
        s.add_term(GenKind::ideal_indicator, element_of(p, k, k), Rational(2));
        s.add_term(GenKind::ideal_indicator, element_of(p, k, k - 1),
                   Rational(-1));
        s.add_term(GenKind::ideal_indicator, element_of(p, k + 1, k),
                   Rational(-1));
        basis.push_back(std::move(s));
      }
      {
        Statistic s;
        s.add_term(GenKind::ideal_indicator,
                   element_of(p, 2 * n - 1, 2 * n - 1), Rational(2));
        s.add_term(GenKind::ideal_indicator,
                   element_of(p, 2 * n - 1, 2 * n - 2), Rational(-1));
        basis.push_back(std::move(s));
      }
      {
        Statistic s;
        s.add_term(GenKind::ideal_indicator, element_of(p, n, n), Rational(2));
        s.add_term(GenKind::ideal_indicator, element_of(p, n + 1, n),
                   Rational(-1));
        basis.push_back(std::move(s));
      }
      break;
    }
  }
  return basis;
}

Integer tridiagonal_det(int ell) {
  if (ell < 2)
    fail(errc::bad_parameter, "tridiagonal determinant needs l >= 2");
  std::vector<std::vector<Integer>> m(
      ell, std::vector<Integer>(ell, Integer(0)));
  for (int i = 0; i < ell; ++i) {
    m[i][i] = -2;
    if (i + 1 < ell) {
      m[i][i + 1] = 1;
      m[i + 1][i] = 1;
    }
  }
  return bareiss_determinant(std::move(m));
}

PartitionDims partition_dims(const Partition& lambda,
                             const EnumerationCaps& caps) {
  const BorderStrip strip = border_strip(lambda);
  PartitionDims dims;
  dims.border_cells = strip.n();
  dims.corner_cells = strip.c();
  dims.formula = dims.border_cells - dims.corner_cells;

  const IdealLattice lattice =
      enumerate_ideals(Poset::from_diagram(Diagram::ferrers(lambda)), caps);
  dims.dim_it = dim_it(lattice);
  dims.dim_at = dim_at(lattice);
  dims.match = dims.dim_it == static_cast<std::size_t>(dims.formula) &&
               dims.dim_at == static_cast<std::size_t>(dims.formula);
  return dims;
}

} // namespace tgl
