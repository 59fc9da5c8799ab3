#include "togglelab/lattice.hpp"

#include <algorithm>

#include "togglelab/error.hpp"

namespace tgl {

bool is_ideal(const Poset& p, IdealMask members) {
  if (members & ~p.all())
    return false;
  for (int e = 0; e < p.size(); ++e)
    if ((members >> e) & 1u)
      if (p.lower_cover_mask(e) & ~members)
        return false;
  return true;
}

bool is_antichain(const Poset& p, ElementMask members) {
  if (members & ~p.all())
    return false;
  for (int a = 0; a < p.size(); ++a) {
    if (!((members >> a) & 1u))
      continue;
    const ElementMask comparable =
        (p.up_set(a) | p.down_set(a)) & ~(ElementMask(1) << a);
    if (comparable & members)
      return false;
  }
  return true;
}

IdealMask ideal_of_antichain(const Poset& p, ElementMask antichain) {
  if (!is_antichain(p, antichain))
    fail(errc::not_an_antichain, "elements are not pairwise incomparable");
  IdealMask ideal = 0;
  for (int e = 0; e < p.size(); ++e)
    if ((antichain >> e) & 1u)
      ideal |= p.down_set(e);
  return ideal;
}

ElementMask max_elements(const Poset& p, IdealMask ideal) {
  if (!is_ideal(p, ideal))
    fail(errc::not_an_ideal, "set is not downward closed");
  ElementMask maxima = 0;
  for (int e = 0; e < p.size(); ++e)
    if (((ideal >> e) & 1u) && !(p.upper_cover_mask(e) & ideal))
      maxima |= ElementMask(1) << e;
  return maxima;
}

ElementMask min_of_complement(const Poset& p, IdealMask ideal) {
  ElementMask result = 0;
  for (int e = 0; e < p.size(); ++e)
    if (!((ideal >> e) & 1u) && !(p.lower_cover_mask(e) & ~ideal))
      result |= ElementMask(1) << e;
  return result;
}

IdealMask rowmotion(const Poset& p, IdealMask ideal) {
  if (!is_ideal(p, ideal))
    fail(errc::not_an_ideal, "set is not downward closed");
  IdealMask next = 0;
  ElementMask generators = min_of_complement(p, ideal);
  for (int e = 0; e < p.size(); ++e)
    if ((generators >> e) & 1u)
      next |= p.down_set(e);
  return next;
}

IdealLattice::IdealLattice(Poset poset, std::vector<IdealMask> ideals)
    : poset_(std::move(poset)), ideals_(std::move(ideals)) {}

std::size_t IdealLattice::index_of(IdealMask ideal) const {
  const auto it = std::lower_bound(ideals_.begin(), ideals_.end(), ideal);
  if (it == ideals_.end() || *it != ideal)
    fail(errc::not_an_ideal, "mask is not an ideal of this lattice");
  return static_cast<std::size_t>(it - ideals_.begin());
}

IdealLattice enumerate_ideals(Poset p, const EnumerationCaps& caps) {
  if (static_cast<std::size_t>(p.size()) > caps.max_elements)
    fail(errc::cap_exceeded,
         "poset has " + std::to_string(p.size()) +
             " elements, above the cap of " + std::to_string(caps.max_elements));

  std::vector<IdealMask> ideals;
  // Depth-first along the canonical linear extension: an element may be
  // included only when all its lower covers already are, so every leaf is a
  // downward-closed set and no branch dies.
  const int n = p.size();
  std::vector<std::pair<int, IdealMask>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [e, mask] = stack.back();
    stack.pop_back();
    if (e == n) {
      ideals.push_back(mask);
      if (ideals.size() > caps.max_ideals)
        fail(errc::cap_exceeded,
             "ideal count reached " + std::to_string(ideals.size()) +
                 ", above the cap of " + std::to_string(caps.max_ideals));
      continue;
    }
    stack.emplace_back(e + 1, mask);
    if (!(p.lower_cover_mask(e) & ~mask))
      stack.emplace_back(e + 1, mask | (IdealMask(1) << e));
  }
  std::sort(ideals.begin(), ideals.end());
  return IdealLattice(std::move(p), std::move(ideals));
}

std::vector<std::vector<std::size_t>> orbits(const IdealLattice& lattice) {
  const std::size_t count = lattice.size();
  std::vector<std::size_t> next(count);
  for (std::size_t k = 0; k < count; ++k)
    next[k] = lattice.index_of(rowmotion(lattice.poset(), lattice.ideal(k)));

  std::vector<bool> seen(count, false);
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t start = 0; start < count; ++start) {
    if (seen[start])
      continue;
    std::vector<std::size_t> cycle;
    std::size_t at = start;
    while (!seen[at]) {
      seen[at] = true;
      cycle.push_back(at);
      at = next[at];
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

} // namespace tgl
