#include "togglelab/json_io.hpp"

#include <nlohmann/json.hpp>

#include "togglelab/error.hpp"

namespace tgl {

using nlohmann::json;

namespace {

json base_row(const VerifyRow& row) {
  json out;
  out["family"] = row.family;
  out["params"] = row.params;
  out["num_elements"] = row.num_elements;
  out["num_ideals"] = row.num_ideals;
  out["rank"] = row.rank;
  out["dim_IT"] = row.dim_it;
  out["dim_AT"] = row.dim_at;
  if (row.predicted)
    out["predicted"] = *row.predicted;
  else
    out["predicted"] = nullptr;
  if (row.pass)
    out["pass"] = *row.pass;
  else
    out["pass"] = nullptr;
  if (row.border_cells)
    out["border_cells"] = *row.border_cells;
  if (row.corner_cells)
    out["corner_cells"] = *row.corner_cells;
  return out;
}

} // namespace

std::string verify_row_to_json(const VerifyRow& row) {
  return base_row(row).dump();
}

std::string dims_report_json(const VerifyRow& row) {
  return base_row(row).dump();
}

std::string bases_row_to_json(const BasesRow& row) {
  json out;
  out["family"] = row.family;
  out["params"] = row.params;
  out["dim_IT"] = row.dim_it;
  out["b1_size"] = row.b1_size;
  out["b2_size"] = row.b2_size;
  out["b1_in_IT"] = row.b1_in_it;
  out["b2_in_IT"] = row.b2_in_it;
  out["b1_independent"] = row.b1_independent;
  out["b2_independent"] = row.b2_independent;
  out["pass"] = row.pass;
  return out.dump();
}

std::string rooks_row_to_json(const RooksRow& row) {
  json out;
  out["family"] = "random";
  out["params"] = "index=" + std::to_string(row.index);
  out["num_elements"] = row.num_cells;
  out["num_ideals"] = row.num_ideals;
  out["rank"] = row.rank;
  out["dim_IT"] = row.dim_it;
  out["dim_AT"] = row.dim_at;
  out["predicted"] = row.rank + 1;
  out["rook_identity"] = row.rook_identity;
  out["chain_length"] = row.chain_length;
  out["chain_independent"] = row.chain_independent;
  out["pass"] = row.pass;
  return out.dump();
}

std::string homomesy_row_to_json(const HomomesyRow& row) {
  json out;
  out["family"] = row.family;
  out["params"] = row.params;
  out["num_orbits"] = row.num_orbits;
  out["checked_statistics"] = row.checked_statistics;
  out["pass"] = row.pass;
  return out.dump();
}

std::string determinant_row_to_json(const DeterminantRow& row) {
  json out;
  out["ell"] = row.ell;
  out["det"] = row.det.get_str();
  out["predicted"] = row.predicted.get_str();
  out["recurrence_ok"] = row.recurrence_ok;
  out["pass"] = row.pass;
  return out.dump();
}

std::string constraints_row_to_json(const ConstraintsRow& row) {
  json out;
  out["family"] = row.family;
  out["params"] = row.params;
  out["basis_dim"] = row.basis_dim;
  out["diagonal_constant"] = row.diagonal_constant;
  out["constant_identity"] = row.constant_identity;
  if (row.root_zero)
    out["root_zero"] = *row.root_zero;
  else
    out["root_zero"] = nullptr;
  out["pass"] = row.pass;
  return out.dump();
}

std::string orbit_report_json(const IdealLattice& lattice,
                              bool include_cycles) {
  const auto cycles = orbits(lattice);
  json sizes = json::array();
  for (const auto& orbit : cycles)
    sizes.push_back(orbit.size());
  json out;
  out["num_ideals"] = lattice.size();
  out["orbit_sizes"] = sizes;
  if (include_cycles) {
    json all = json::array();
    for (const auto& orbit : cycles) {
      json cycle = json::array();
      for (std::size_t k : orbit) {
        json members = json::array();
        const IdealMask mask = lattice.ideal(k);
        for (int e = 0; e < lattice.poset().size(); ++e)
          if ((mask >> e) & 1u)
            members.push_back(e);
        cycle.push_back(members);
      }
      all.push_back(cycle);
    }
    out["cycles"] = all;
  }
  return out.dump();
}

SuiteResult run_suite(const std::string& suite, int max_n, int trials,
                      std::uint64_t seed, const EnumerationCaps& caps) {
  SuiteResult result;
  result.suite = suite;
  result.pass = true;

  const auto add = [&result](const std::string& row_json, bool pass) {
    result.row_json.push_back(row_json);
    result.pass = result.pass && pass;
  };

  // With no explicit bound, every suite runs at its published bounds: the
  // one-parameter families to 5 (type A to 6), partitions to 10 boxes,
  // 100 random diagrams, determinants to size 12.
  const int family_max = max_n > 0 ? max_n : 5;
  const int type_a_max = max_n > 0 ? max_n : 6;
  const auto run_one = [&](const std::string& name) {
    if (name == "main") {
      for (const VerifyRow& row :
           suite_main(family_max, family_max, type_a_max, family_max, caps))
        add(verify_row_to_json(row), row.pass.value_or(false));
    } else if (name == "partitions") {
      const int bound = max_n > 0 ? max_n : 10;
      for (const VerifyRow& row : suite_partitions(bound, caps))
        add(verify_row_to_json(row), row.pass.value_or(false));
    } else if (name == "bases") {
      for (const BasesRow& row :
           suite_bases(family_max, family_max, type_a_max, family_max, caps))
        add(bases_row_to_json(row), row.pass);
    } else if (name == "rooks") {
      const int count = trials > 0 ? trials : 100;
      for (const RooksRow& row : suite_rooks(count, seed, 20, caps))
        add(rooks_row_to_json(row), row.pass);
    } else if (name == "homomesy") {
      for (const HomomesyRow& row : suite_homomesy(family_max, family_max,
                                                   type_a_max, family_max,
                                                   caps))
        add(homomesy_row_to_json(row), row.pass);
    } else if (name == "determinant") {
      const int bound = max_n > 0 ? max_n : 12;
      for (const DeterminantRow& row : suite_determinant(bound))
        add(determinant_row_to_json(row), row.pass);
    } else if (name == "constraints") {
      for (const ConstraintsRow& row :
           suite_constraints(family_max, family_max, type_a_max, family_max,
                             caps))
        add(constraints_row_to_json(row), row.pass);
    } else {
      fail(errc::bad_parameter,
           "unknown suite '" + name +
               "' (main|bases|partitions|rooks|homomesy|determinant|"
               "constraints|all)");
    }
  };

  if (suite == "all") {
    for (const char* name : {"main", "bases", "partitions", "rooks",
                             "homomesy", "determinant", "constraints"})
      run_one(name);
  } else {
    run_one(suite);
  }
  return result;
}

std::string suite_report_json(const SuiteResult& result) {
  json rows = json::array();
  for (const std::string& row : result.row_json)
    rows.push_back(json::parse(row));
  json out;
  out["suite"] = result.suite;
  out["num_rows"] = result.row_json.size();
  out["pass"] = result.pass;
  out["rows"] = rows;
  return out.dump();
}

std::string basis_report_json(Family f, int m, int n, const std::string& which,
                              bool include_vectors,
                              const EnumerationCaps& caps) {
  const bool want_b1 = which == "B1" || which == "both";
  const bool want_b2 = which == "B2" || which == "both";
  if (!want_b1 && !want_b2)
    fail(errc::bad_parameter, "which must be B1, B2 or both");

  const Diagram d = family_diagram(f, m, n);
  const IdealLattice lattice = enumerate_ideals(Poset::from_diagram(d), caps);
  const Poset& p = lattice.poset();
  const Subspace it_space = ideal_toggle_space(lattice);

  json out;
  out["family"] = family_name(f);
  out["params"] = f == Family::rectangle
                      ? "m=" + std::to_string(m) + ",n=" + std::to_string(n)
                      : "n=" + std::to_string(n);
  out["dim_IT"] = it_space.dim();
  json cells = json::array();
  for (const Cell& c : p.labels())
    cells.push_back({c.row, c.col});
  out["cells"] = cells;

  const auto dump_basis = [&](const std::vector<Statistic>& basis) {
    json arr = json::array();
    for (const Statistic& s : basis) {
      json entry = json::parse(statistic_to_json(s));
      entry["in_IT"] = it_space.contains(as_vector(lattice, s));
      if (include_vectors) {
        json vec = json::array();
        for (const Rational& q : as_vector(lattice, s))
          vec.push_back(to_string(q));
        entry["vector"] = vec;
      }
      arr.push_back(entry);
    }
    return arr;
  };
  if (want_b1)
    out["B1"] = dump_basis(basis_b1(f, m, n, p));
  if (want_b2)
    out["B2"] = dump_basis(basis_b2(f, m, n, p));
  return out.dump();
}

std::string rook_report_json(const Diagram& d, Cell cell,
                             const EnumerationCaps& caps) {
  const Statistic full = rook(d, cell);
  const Statistic reduced = reduced_rook(d, cell);

  json out;
  out["cell"] = {cell.row, cell.col};
  out["rook"] = json::parse(statistic_to_json(full));
  out["reduced"] = json::parse(statistic_to_json(reduced));
  // support map keyed by cell for readability
  json support = json::object();
  for (const auto& [key, coeff] : reduced.terms()) {
    const Cell c = d.cells()[key_element(key)];
    support[std::to_string(c.row) + "," + std::to_string(c.col)] =
        to_string(coeff);
  }
  out["reduced_support"] = support;

  // The evaluation checks need the lattice; on diagrams too large to
  // enumerate they are reported as null rather than failing the command.
  try {
    const IdealLattice lattice =
        enumerate_ideals(Poset::from_diagram(d), caps);
    const Poset& p = lattice.poset();
    bool always_one = true;
    for (std::size_t k = 0; k < lattice.size(); ++k)
      if (evaluate(p, full, lattice.ideal(k)) != 1) {
        always_one = false;
        break;
      }
    out["evaluates_to_one"] = always_one;
    out["one_mesic"] = is_d_mesic(lattice, reduced, Rational(1));
    out["in_AT"] =
        antichain_toggle_space(lattice).contains(as_vector(lattice, reduced));
  } catch (const error& e) {
    if (e.code() != errc::cap_exceeded)
      throw;
    out["evaluates_to_one"] = nullptr;
    out["one_mesic"] = nullptr;
    out["in_AT"] = nullptr;
  }
  return out.dump();
}

std::string predicates_to_json(const DiagramPredicates& p) {
  json out;
  out["connected"] = p.connected;
  out["row_convex"] = p.row_convex;
  out["column_convex"] = p.column_convex;
  out["simply_connected"] = p.simply_connected;
  out["no_outward_corners"] = p.no_outward_corners;
  return out.dump();
}

} // namespace tgl
