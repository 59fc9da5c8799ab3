#ifndef TOGGLELAB_VERIFY_HPP
#define TOGGLELAB_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "togglelab/rooks.hpp"

namespace tgl {

constexpr std::uint64_t kDefaultSeed = 7;

/// One input source: a named family instance, a partition, or a raw diagram.
class InstanceSpec {
public:
  static InstanceSpec family(Family f, int m, int n);
  static InstanceSpec partition(Partition lambda);
  static InstanceSpec raw_diagram(Diagram d, std::string origin = "diagram");

  Diagram diagram() const;
  std::string family_label() const;
  std::string params() const;

  /// rk+1 for the four families, N-C for partitions, rk+1 for raw diagrams
  /// that are simply connected with no outward corners, nothing otherwise.
  std::optional<long long> predicted_dim() const;

  bool is_partition() const { return kind_ == Kind::partition; }
  const Partition& partition_value() const { return lambda_; }

private:
  enum class Kind { family, partition, raw };
  Kind kind_ = Kind::raw;
  Family family_ = Family::rectangle;
  int m_ = 0, n_ = 0;
  Partition lambda_{std::vector<int>{1}};
  Diagram diagram_{};
  std::string origin_;

  InstanceSpec() = default;
};

/// The schema shared by all verification rows.
struct VerifyRow {
  std::string family;
  std::string params;
  std::size_t num_elements = 0;
  std::size_t num_ideals = 0;
  int rank = 0;
  long long dim_it = 0;
  long long dim_at = 0;
  std::optional<long long> predicted;
  std::optional<bool> pass; // absent when there is no prediction
  // partition extras
  std::optional<int> border_cells, corner_cells;
};

VerifyRow verify_instance(const InstanceSpec& spec,
                          const EnumerationCaps& caps = {});

/// Dimension rows for the four families: rectangles over all ordered pairs
/// 2 <= m,n <= max_rect, the one-parameter families over 2..their max.
std::vector<VerifyRow> suite_main(int max_rect, int max_staircase,
                                  int max_type_a, int max_type_b,
                                  const EnumerationCaps& caps = {});

/// Dimension rows for every partition with at most max_boxes boxes.
std::vector<VerifyRow> suite_partitions(int max_boxes,
                                        const EnumerationCaps& caps = {});

struct BasesRow {
  std::string family;
  std::string params;
  std::size_t dim_it = 0;
  std::size_t b1_size = 0, b2_size = 0;
  bool b1_in_it = false, b2_in_it = false;
  bool b1_independent = false, b2_independent = false;
  bool pass = false;
};

std::vector<BasesRow> suite_bases(int max_rect, int max_staircase,
                                  int max_type_a, int max_type_b,
                                  const EnumerationCaps& caps = {});

struct RooksRow {
  std::size_t index = 0;
  std::size_t num_cells = 0;
  std::size_t num_ideals = 0;
  int rank = 0;
  long long dim_it = 0;
  long long dim_at = 0;
  bool dims_match_rank = false;   // both dimensions equal rank+1
  bool rook_identity = false;     // R = 1 on every ideal, every cell
  std::size_t chain_length = 0;
  bool chain_independent = false;
  bool pass = false;
};

/// Seeded random no-outward-corner diagrams; each row checks the dimension
/// statement, the rook identity at every cell, and the southeast-chain
/// reduced rooks' independence and count.
std::vector<RooksRow> suite_rooks(int trials, std::uint64_t seed,
                                  std::size_t max_cells = 20,
                                  const EnumerationCaps& caps = {});

struct HomomesyRow {
  std::string family;
  std::string params;
  std::size_t num_orbits = 0;
  std::size_t checked_statistics = 0;
  bool pass = false; // every orbit sum of every toggle statistic is zero
};

std::vector<HomomesyRow> suite_homomesy(int max_rect, int max_staircase,
                                        int max_type_a, int max_type_b,
                                        const EnumerationCaps& caps = {});

struct DeterminantRow {
  int ell = 0;
  Integer det;
  Integer predicted;
  bool recurrence_ok = false;
  bool pass = false;
};

std::vector<DeterminantRow> suite_determinant(int max_ell = 12);

struct ConstraintsRow {
  std::string family;
  std::string params;
  std::size_t basis_dim = 0;
  bool diagonal_constant = false; // equal coefficients along diagonals
  bool constant_identity = false; // c = -sum over minimal elements
  std::optional<bool> root_zero;  // type A/B only
  bool pass = false;
};

std::vector<ConstraintsRow> suite_constraints(int max_rect, int max_staircase,
                                              int max_type_a, int max_type_b,
                                              const EnumerationCaps& caps = {});

} // namespace tgl

#endif
