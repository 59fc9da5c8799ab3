#include "togglelab/rooks.hpp"

#include <algorithm>

#include "togglelab/error.hpp"

namespace tgl {

namespace {

void require_rook_diagram(const Diagram& d) {
  const DiagramPredicates p = predicates(d);
  if (!p.simply_connected || !p.no_outward_corners || !p.connected)
    fail(errc::bad_diagram,
         "rook statistics need a connected, simply connected diagram with no "
         "outward corners");
}

int element_of(const Poset& p, Cell c) {
  const int e = p.element_at(c);
  if (e < 0)
    fail(errc::cell_not_in_diagram, "cell (" + std::to_string(c.row) + "," +
                                        std::to_string(c.col) +
                                        ") is not in the diagram");
  return e;
}

} // namespace

Statistic rook(const Diagram& d, Cell cell) {
  require_rook_diagram(d);
  if (d.cell_index(cell) < 0)
    fail(errc::cell_not_in_diagram, "cell (" + std::to_string(cell.row) + "," +
                                        std::to_string(cell.col) +
                                        ") is not in the diagram");

  Statistic r;
  const auto& cells = d.cells();
  for (int e = 0; e < static_cast<int>(cells.size()); ++e) {
    const Cell q = cells[e];
    if (q.row <= cell.row && q.col <= cell.col)
      r.add_term(GenKind::toggle_in, e, Rational(1));
    if (q.row >= cell.row && q.col >= cell.col)
      r.add_term(GenKind::antichain_indicator, e, Rational(1));
    if (q.row < cell.row && q.col < cell.col &&
        d.contains(q.row + 1, q.col) && d.contains(q.row, q.col + 1))
      r.add_term(GenKind::antichain_indicator, e, Rational(-1));
    if (q.row > cell.row && q.col > cell.col &&
        d.contains(q.row - 1, q.col) && d.contains(q.row, q.col - 1))
      r.add_term(GenKind::toggle_in, e, Rational(-1));
  }
  return r;
}

Statistic reduced_rook(const Diagram& d, Cell cell) {
  // T+ = T + T-, then drop the pure toggles: only the T- frame survives.
  const Statistic full = rook(d, cell);
  Statistic reduced;
  for (const auto& [key, coeff] : full.terms()) {
    const GenKind kind = key_kind(key);
    if (kind == GenKind::toggle_in || kind == GenKind::antichain_indicator)
      reduced.add_term(GenKind::antichain_indicator, key_element(key), coeff);
    else
      fail(errc::bad_diagram, "rook carries an unexpected generator");
  }
  return reduced;
}

HalfRookIdentity half_rook_identity(const Diagram& d,
                                    const IdealLattice& lattice, Cell cell) {
  const Poset& p = lattice.poset();
  element_of(p, cell);
  if (!predicates(d).simply_connected)
    fail(errc::predicate_fail, "half-rook identity needs a simply connected "
                               "diagram");
  if (!no_se_outward_corners(d, cell))
    fail(errc::predicate_fail,
         "half-rook identity needs no NE boundary corner southeast of the "
         "cell");

  Statistic g;
  Statistic expansion;
  for (int e = 0; e < p.size(); ++e) {
    const Cell q = p.label(e);
    if (q.row < cell.row || q.col < cell.col)
      continue;
    g.add_term(GenKind::antichain_indicator, e, Rational(1));
    const bool interior = q.row > cell.row && q.col > cell.col &&
                          d.contains(q.row - 1, q.col) &&
                          d.contains(q.row, q.col - 1);
    if (interior)
      g.add_term(GenKind::toggle_in, e, Rational(-1));
    else
      expansion.add_term(GenKind::antichain_indicator, e, Rational(1));
  }

  HalfRookIdentity result;
  result.upper_expansion = std::move(expansion);
  const QVector lhs =
      as_vector(lattice, Statistic::indicator(element_of(p, cell)));
  result.holds = (lhs == as_vector(lattice, g));
  return result;
}

SeChainRooks se_chain_rooks(const Diagram& d, const IdealLattice& lattice) {
  const DiagramPredicates preds = predicates(d);
  if (!preds.simply_connected || !preds.no_outward_corners || !preds.connected)
    fail(errc::predicate_fail,
         "the southeast chain needs a connected, simply connected diagram "
         "with no outward corners");
  const Poset& p = lattice.poset();

  // The unique cell adjacent to the common northwest endpoint of the two
  // boundary paths: no north, west or northwest neighbor.
  std::vector<Cell> starts;
  for (const Cell& c : d.cells())
    if (!d.contains(c.row - 1, c.col) && !d.contains(c.row, c.col - 1) &&
        !d.contains(c.row - 1, c.col - 1))
      starts.push_back(c);
  if (starts.size() != 1)
    fail(errc::predicate_fail,
         "expected a unique northwest start cell, found " +
             std::to_string(starts.size()));

  SeChainRooks result;
  Cell at = starts.front();
  result.chain.push_back(at);
  for (;;) {
    if (d.contains(at.row + 1, at.col))
      at = {at.row + 1, at.col};
    else if (d.contains(at.row, at.col + 1))
      at = {at.row, at.col + 1};
    else
      break;
    result.chain.push_back(at);
  }

  // The greedy walk must be a maximal chain of cardinality rk(P)+1.
  if (result.chain.size() != static_cast<std::size_t>(p.rank()) + 1)
    fail(errc::predicate_fail,
         "greedy south-east walk is not a maximal chain of length rk+1");
  const int first = element_of(p, result.chain.front());
  const int last = element_of(p, result.chain.back());
  if (!((p.minimals() >> first) & 1u) || !((p.maximals() >> last) & 1u))
    fail(errc::predicate_fail, "greedy walk does not join a minimal element "
                               "to a maximal element");

  std::vector<QVector> vectors;
  for (const Cell& c : result.chain) {
    result.rooks.push_back(reduced_rook(d, c));
    vectors.push_back(as_vector(lattice, result.rooks.back()));
  }
  result.count = result.rooks.size();
  result.independent =
      QMatrix::from_rows(std::move(vectors)).rank() == result.count;
  return result;
}

} // namespace tgl
