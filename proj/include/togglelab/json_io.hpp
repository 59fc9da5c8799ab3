#ifndef TOGGLELAB_JSON_IO_HPP
#define TOGGLELAB_JSON_IO_HPP

#include <string>

#include "togglelab/verify.hpp"

namespace tgl {

/// Report objects, serialized with stable (alphabetical) key order so that
/// identical inputs always produce byte-identical output.

std::string verify_row_to_json(const VerifyRow& row);
std::string bases_row_to_json(const BasesRow& row);
std::string rooks_row_to_json(const RooksRow& row);
std::string homomesy_row_to_json(const HomomesyRow& row);
std::string determinant_row_to_json(const DeterminantRow& row);
std::string constraints_row_to_json(const ConstraintsRow& row);

/// {"orbit_sizes": [...], "num_ideals": N} plus, when requested, the full
/// cycles with each ideal as a sorted element list.
std::string orbit_report_json(const IdealLattice& lattice, bool include_cycles);

/// Dimension report for one instance (the cmd_dims payload).
std::string dims_report_json(const VerifyRow& row);

struct SuiteResult {
  std::string suite;
  std::vector<std::string> row_json; // one serialized object per row
  bool pass = false;
};

/// {"suite": ..., "num_rows": N, "pass": ..., "rows": [...]}
std::string suite_report_json(const SuiteResult& result);

/// Named verify suite front end. Suites: main, bases, partitions, rooks,
/// homomesy, determinant, constraints, all. max_n bounds the family sweeps
/// (or the partition box count); trials/seed drive the random-diagram suite.
SuiteResult run_suite(const std::string& suite, int max_n, int trials,
                      std::uint64_t seed, const EnumerationCaps& caps);

/// Basis export: the two collections for one family instance, optionally with
/// their lattice vectors. which: "B1", "B2" or "both".
std::string basis_report_json(Family f, int m, int n, const std::string& which,
                              bool include_vectors,
                              const EnumerationCaps& caps);

/// Rook and reduced rook at a cell, with support maps, the constant-1
/// evaluation check and the 1-mesy check.
std::string rook_report_json(const Diagram& d, Cell cell,
                             const EnumerationCaps& caps);

std::string predicates_to_json(const DiagramPredicates& p);

} // namespace tgl

#endif
