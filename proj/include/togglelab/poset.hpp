#ifndef TOGGLELAB_POSET_HPP
#define TOGGLELAB_POSET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "togglelab/diagram.hpp"

namespace tgl {

/// Element subsets are bitmasks over the canonical element order, so posets
/// are capped at 64 elements (far above desk scale; enumeration applies its
/// own configurable cap first).
using ElementMask = std::uint64_t;

constexpr std::size_t kMaxPosetElements = 64;

/// A finite poset given by its cover relation, with cells of the defining
/// diagram as labels. Elements are indexed 0..n-1 in lex (row, col) order,
/// which is a linear extension. Immutable after construction.
class Poset {
public:
  static Poset from_diagram(const Diagram& d);

  int size() const { return n_; }
  Cell label(int e) const { return labels_[e]; }
  const std::vector<Cell>& labels() const { return labels_; }

  /// Element index of a cell, or -1 when the cell is not in the diagram.
  int element_at(Cell c) const;

  bool leq(int a, int b) const { return (up_[a] >> b) & 1u; }

  const std::vector<int>& upper_covers(int e) const { return upper_covers_[e]; }
  const std::vector<int>& lower_covers(int e) const { return lower_covers_[e]; }
  ElementMask upper_cover_mask(int e) const { return uc_mask_[e]; }
  ElementMask lower_cover_mask(int e) const { return lc_mask_[e]; }

  /// All elements <= e (including e), as a mask; likewise >= e.
  ElementMask down_set(int e) const { return down_[e]; }
  ElementMask up_set(int e) const { return up_[e]; }

  ElementMask minimals() const { return minimals_; }
  ElementMask maximals() const { return maximals_; }
  ElementMask all() const;

  /// Longest chain cardinality minus one.
  int rank() const;

  /// Maximum antichain cardinality (Dilworth, via maximum bipartite matching
  /// on the comparability relation).
  int width() const;

  /// All cover pairs (a, b) with a covered by b, lex sorted.
  std::vector<std::pair<int, int>> cover_pairs() const;

  /// {"elements": [[i,j], ...], "covers": [[a,b], ...]}
  std::string to_json() const;

private:
  int n_ = 0;
  std::vector<Cell> labels_;
  std::vector<ElementMask> down_, up_;
  std::vector<ElementMask> uc_mask_, lc_mask_;
  std::vector<std::vector<int>> upper_covers_, lower_covers_;
  ElementMask minimals_ = 0, maximals_ = 0;
};

} // namespace tgl

#endif
