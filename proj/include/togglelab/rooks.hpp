#ifndef TOGGLELAB_ROOKS_HPP
#define TOGGLELAB_ROOKS_HPP

#include <vector>

#include "togglelab/spaces.hpp"

namespace tgl {

/// The four-quadrant rook statistic anchored at a cell of a simply connected
/// diagram with no outward corners:
///   + T+ over the weak northwest quadrant,
///   + T- over the weak southeast quadrant,
///   - T- over strict-northwest cells whose south and east neighbors are in D,
///   - T+ over strict-southeast cells whose north and west neighbors are in D.
/// Generators of cells outside D are dropped. Evaluates to 1 on every ideal.
/// Generator elements are diagram cell indices, which coincide with the
/// element indices of the poset defined by the diagram.
/// Throws bad_diagram / cell_not_in_diagram.
Statistic rook(const Diagram& d, Cell cell);

/// The element of span(T-) equivalent to the rook modulo span(T): every T+
/// is rewritten as T + T- and the pure-toggle terms are discarded. Lies in
/// A_T(P) and is 1-mesic under rowmotion.
Statistic reduced_rook(const Diagram& d, Cell cell);

struct HalfRookIdentity {
  bool holds = false;
  /// sum over the weak southeast quadrant minus the strict interior, i.e. the
  /// upper-triangular expansion of the indicator in the T- frame; its
  /// coefficient at the anchor cell is 1.
  Statistic upper_expansion;
};

/// Verifies 1_(i,j) = sum_{i'>=i, j'>=j} T-_(i',j')
///                  - sum_{(i'-1,j'),(i',j'-1) in D, i'>i, j'>j} T+_(i',j')
/// as an exact equality of vectors over all ideals. Requires the diagram to
/// be simply connected with no NE boundary corner weakly southeast of the
/// cell. Throws predicate_fail.
HalfRookIdentity half_rook_identity(const Diagram& d,
                                    const IdealLattice& lattice, Cell cell);

struct SeChainRooks {
  std::vector<Cell> chain;
  std::vector<Statistic> rooks;
  bool independent = false;
  std::size_t count = 0;
};

/// Reduced rooks along the maximal chain that starts at the unique cell with
/// no north, west or northwest neighbor and repeatedly steps south if
/// possible, else east. The chain is checked post hoc to be a maximal chain
/// of cardinality rk(P)+1, and the rooks' exact rank is computed.
/// Throws predicate_fail.
SeChainRooks se_chain_rooks(const Diagram& d, const IdealLattice& lattice);

} // namespace tgl

#endif
