#ifndef TOGGLELAB_LATTICE_HPP
#define TOGGLELAB_LATTICE_HPP

#include <cstdint>
#include <vector>

#include "togglelab/poset.hpp"

namespace tgl {

/// An order ideal as a bitmask over poset element indices.
using IdealMask = ElementMask;

struct EnumerationCaps {
  std::size_t max_elements = 40;
  std::size_t max_ideals = 1'000'000;
};

bool is_ideal(const Poset& p, IdealMask members);
bool is_antichain(const Poset& p, ElementMask members);

/// Downward closure of an antichain; inverse of max_elements.
/// Throws not_an_antichain.
IdealMask ideal_of_antichain(const Poset& p, ElementMask antichain);

/// Maximal elements of an ideal. Throws not_an_ideal.
ElementMask max_elements(const Poset& p, IdealMask ideal);

/// Sends I to the ideal generated by Min(P \ I). Throws not_an_ideal.
IdealMask rowmotion(const Poset& p, IdealMask ideal);

/// Min(P \ I) itself: the elements togglable into I.
ElementMask min_of_complement(const Poset& p, IdealMask ideal);

/// The full set J(P), canonically ordered ascending by mask value.
class IdealLattice {
public:
  IdealLattice(Poset poset, std::vector<IdealMask> ideals);

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return ideals_.size(); }
  IdealMask ideal(std::size_t k) const { return ideals_[k]; }
  const std::vector<IdealMask>& ideals() const { return ideals_; }

  /// Position of an ideal in the canonical order. Throws not_an_ideal.
  std::size_t index_of(IdealMask ideal) const;

private:
  Poset poset_;
  std::vector<IdealMask> ideals_;
};

/// Depth-first enumeration along the canonical linear extension with
/// downward-closure pruning. Throws cap_exceeded (message carries the count
/// reached) when either cap is hit.
IdealLattice enumerate_ideals(Poset p, const EnumerationCaps& caps = {});

/// Rowmotion cycles as lattice indices; every cycle starts at its smallest
/// index and cycles are ordered by that index.
std::vector<std::vector<std::size_t>> orbits(const IdealLattice& lattice);

} // namespace tgl

#endif
