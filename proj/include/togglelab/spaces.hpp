#ifndef TOGGLELAB_SPACES_HPP
#define TOGGLELAB_SPACES_HPP

#include <string>
#include <vector>

#include "togglelab/statistic.hpp"
#include "togglelab/subspace.hpp"

namespace tgl {

Subspace span_of(const IdealLattice& lattice,
                 const std::vector<Statistic>& generators);

/// span(1_p | p in P)
Subspace indicator_span(const IdealLattice& lattice);
/// span(T-_p | p in P)
Subspace antichain_indicator_span(const IdealLattice& lattice);
/// span(1, T_p | p in P)
Subspace toggle_constant_span(const IdealLattice& lattice);

/// I_T(P) = span(1, T_p) ∩ span(1_p); the order-ideal toggleability space.
Subspace ideal_toggle_space(const IdealLattice& lattice);
/// A_T(P) = span(1, T_p) ∩ span(T-_p); the antichain toggleability space.
Subspace antichain_toggle_space(const IdealLattice& lattice);

std::size_t dim_it(const IdealLattice& lattice);
std::size_t dim_at(const IdealLattice& lattice);

/// Coordinates of a vector in the toggle/constant frame:
/// v = constant * 1 + sum_p coeffs[p] * T_p.
struct ToggleDecomposition {
  Rational constant;
  QVector coeffs;

  Statistic to_statistic() const;
};

/// Unique decomposition of a vector lying in span(1, T_p). The generators'
/// independence is verified first; a dependency is reported with a witness
/// combination (dependent_generators), and a vector outside the span raises
/// not_in_span.
ToggleDecomposition decompose_toggle(const IdealLattice& lattice,
                                     const QVector& v);

/// Diamond-constraint check for p1 <. p2 <. p4, p1 <. p3 <. p4, with the
/// witness sets S_i = Min(P \ I(p_i)) and S_23 = Min(P \ I(p2, p3)).
/// Conditions (a)-(c) are the primary hypotheses; (a')-(d') an equivalent
/// derived system, exposed separately so the equivalence can be observed
/// rather than assumed.
struct DiamondCheck {
  ElementMask s1 = 0, s2 = 0, s3 = 0, s23 = 0;
  ElementMask s2_minus_s1 = 0, s3_minus_s1 = 0;
  bool cond_a = false, cond_b = false, cond_c = false;
  bool prime_a = false, prime_b = false, prime_c2 = false, prime_c3 = false,
       prime_d = false;
  bool hypotheses_hold = false;
  bool primes_hold = false;
  bool conditions_agree = false;
};

/// Throws not_a_diamond when the cover pattern fails.
DiamondCheck check_diamond(const Poset& p, int p1, int p2, int p3, int p4);

/// True iff the down-sets of q1 and q2 are disjoint and pp is the unique
/// element covering both; forces the pp-coefficient of any toggle
/// decomposition of an order-ideal statistic to zero.
bool check_root_zero(const Poset& p, int pp, int q1, int q2);

/// Diagonal toggle statistic f_k: the sum of T over the diagonal i-j = k,
/// minus 1 when that diagonal meets Min(P). Requires a connected, row- and
/// column-convex diagram; condition (i): diagonals k, k-1 and k+1 nonempty;
/// condition (ii): consecutive diagonal cells exist iff both off-diagonal
/// neighbors exist (a biconditional over all grid positions; quantifications
/// with no witnesses are vacuously satisfied and flagged).
struct DiagonalStatistic {
  Statistic statistic;
  bool constant_added = false;
  bool vacuous_closure = false;
};

DiagonalStatistic diagonal_statistic(const Diagram& d, const Poset& p, int k);

/// The indicator-side form of the same statistic:
/// g_k = -2 sum_{P_k} 1 + sum_{Q_k} 1, with Q_k the cells of the adjacent
/// diagonals covering or covered by a cell of P_k.
Statistic diagonal_indicator_form(const Poset& p, int k);

enum class Family { rectangle, staircase, type_a, type_b };

/// Accepts rect|rectangle, staircase, typeA, typeB (case-insensitive).
/// Throws unknown_family.
Family parse_family(const std::string& name);
const char* family_name(Family f);

/// Diagram of a family instance; m is ignored except for rectangles.
Diagram family_diagram(Family f, int m, int n);
/// rk(P) + 1 for the family instance.
int family_predicted_dim(Family f, int m, int n);

/// The explicit bases of the order-ideal toggleability space: B1 in
/// toggle/constant form, B2 in indicator form, with the published index
/// ranges per family. The poset must be the one of family_diagram(f, m, n).
std::vector<Statistic> basis_b1(Family f, int m, int n, const Poset& p);
std::vector<Statistic> basis_b2(Family f, int m, int n, const Poset& p);

/// det(-2 I_l + U_l + L_l), exactly. Throws bad_parameter for l < 2.
Integer tridiagonal_det(int ell);

struct PartitionDims {
  int border_cells = 0;      // N
  int corner_cells = 0;      // C
  int formula = 0;           // N - C
  std::size_t dim_it = 0;
  std::size_t dim_at = 0;
  bool match = false;
};

PartitionDims partition_dims(const Partition& lambda,
                             const EnumerationCaps& caps = {});

} // namespace tgl

#endif
