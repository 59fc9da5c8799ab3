#include "togglelab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "togglelab/error.hpp"

namespace tgl {

namespace {

/// Runs fn(i) for every index on a small pool; results land in a pre-sized
/// vector, so row order never depends on scheduling. Exceptions from workers
/// are rethrown on the caller thread.
template <typename Row, typename Fn>
std::vector<Row> parallel_rows(std::size_t count, Fn fn) {
  std::vector<Row> rows(count);
  if (count == 0)
    return rows;
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      rows[i] = fn(i);
    return rows;
  }
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= count)
          return;
        try {
          rows[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure)
            failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
  return rows;
}

struct FamilyInstance {
  Family family;
  int m, n;
};

std::vector<FamilyInstance> family_sweep(int max_rect, int max_staircase,
                                         int max_type_a, int max_type_b) {
  std::vector<FamilyInstance> out;
  for (int m = 2; m <= max_rect; ++m)
    for (int n = 2; n <= max_rect; ++n)
      out.push_back({Family::rectangle, m, n});
  for (int n = 2; n <= max_staircase; ++n)
    out.push_back({Family::staircase, 0, n});
  for (int n = 2; n <= max_type_a; ++n)
    out.push_back({Family::type_a, 0, n});
  for (int n = 2; n <= max_type_b; ++n)
    out.push_back({Family::type_b, 0, n});
  return out;
}

} // namespace

InstanceSpec InstanceSpec::family(Family f, int m, int n) {
  InstanceSpec spec;
  spec.kind_ = Kind::family;
  spec.family_ = f;
  spec.m_ = m;
  spec.n_ = n;
  spec.diagram_ = family_diagram(f, m, n);
  return spec;
}

InstanceSpec InstanceSpec::partition(Partition lambda) {
  InstanceSpec spec;
  spec.kind_ = Kind::partition;
  spec.lambda_ = std::move(lambda);
  spec.diagram_ = Diagram::ferrers(spec.lambda_);
  return spec;
}

InstanceSpec InstanceSpec::raw_diagram(Diagram d, std::string origin) {
  InstanceSpec spec;
  spec.kind_ = Kind::raw;
  spec.diagram_ = std::move(d);
  spec.origin_ = std::move(origin);
  return spec;
}

Diagram InstanceSpec::diagram() const { return diagram_; }

std::string InstanceSpec::family_label() const {
  switch (kind_) {
    case Kind::family: return family_name(family_);
    case Kind::partition: return "partition";
    case Kind::raw: return origin_;
  }
  return "?";
}

std::string InstanceSpec::params() const {
  switch (kind_) {
    case Kind::family:
      if (family_ == Family::rectangle)
        return "m=" + std::to_string(m_) + ",n=" + std::to_string(n_);
      return "n=" + std::to_string(n_);
    case Kind::partition:
      return lambda_.to_string();
    case Kind::raw:
      return "cells=" + std::to_string(diagram_.size());
  }
  return "";
}

std::optional<long long> InstanceSpec::predicted_dim() const {
  switch (kind_) {
    case Kind::family:
      return family_predicted_dim(family_, m_, n_);
    case Kind::partition: {
      const BorderStrip strip = border_strip(lambda_);
      return strip.n() - strip.c();
    }
    case Kind::raw: {
      const DiagramPredicates p = predicates(diagram_);
      if (p.connected && p.simply_connected && p.no_outward_corners)
        return Poset::from_diagram(diagram_).rank() + 1;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

VerifyRow verify_instance(const InstanceSpec& spec,
                          const EnumerationCaps& caps) {
  const Diagram d = spec.diagram();
  const IdealLattice lattice = enumerate_ideals(Poset::from_diagram(d), caps);

  VerifyRow row;
  row.family = spec.family_label();
  row.params = spec.params();
  row.num_elements = lattice.poset().size();
  row.num_ideals = lattice.size();
  row.rank = lattice.poset().rank();
  row.dim_it = static_cast<long long>(dim_it(lattice));
  row.dim_at = static_cast<long long>(dim_at(lattice));
  row.predicted = spec.predicted_dim();
  if (row.predicted)
    row.pass = (row.dim_it == *row.predicted && row.dim_at == *row.predicted);
  if (spec.is_partition()) {
    const BorderStrip strip = border_strip(spec.partition_value());
    row.border_cells = strip.n();
    row.corner_cells = strip.c();
  }
  return row;
}

std::vector<VerifyRow> suite_main(int max_rect, int max_staircase,
                                  int max_type_a, int max_type_b,
                                  const EnumerationCaps& caps) {
  const auto sweep =
      family_sweep(max_rect, max_staircase, max_type_a, max_type_b);
  return parallel_rows<VerifyRow>(sweep.size(), [&](std::size_t i) {
    const FamilyInstance& inst = sweep[i];
    return verify_instance(InstanceSpec::family(inst.family, inst.m, inst.n),
                           caps);
  });
}

std::vector<VerifyRow> suite_partitions(int max_boxes,
                                        const EnumerationCaps& caps) {
  const std::vector<Partition> shapes = Partition::all_with_at_most(max_boxes);
  return parallel_rows<VerifyRow>(shapes.size(), [&](std::size_t i) {
    return verify_instance(InstanceSpec::partition(shapes[i]), caps);
  });
}

std::vector<BasesRow> suite_bases(int max_rect, int max_staircase,
                                  int max_type_a, int max_type_b,
                                  const EnumerationCaps& caps) {
  const auto sweep =
      family_sweep(max_rect, max_staircase, max_type_a, max_type_b);
  return parallel_rows<BasesRow>(sweep.size(), [&](std::size_t i) {
    const FamilyInstance& inst = sweep[i];
    const Diagram d = family_diagram(inst.family, inst.m, inst.n);
    const IdealLattice lattice = enumerate_ideals(Poset::from_diagram(d), caps);
    const Subspace it_space = ideal_toggle_space(lattice);

    BasesRow row;
    row.family = family_name(inst.family);
    row.params = inst.family == Family::rectangle
                     ? "m=" + std::to_string(inst.m) + ",n=" +
                           std::to_string(inst.n)
                     : "n=" + std::to_string(inst.n);
    row.dim_it = it_space.dim();

    const auto check = [&](const std::vector<Statistic>& basis, bool& in_it,
                           bool& independent, std::size_t& size) {
      size = basis.size();
      in_it = true;
      std::vector<QVector> vectors;
      for (const Statistic& f : basis) {
        vectors.push_back(as_vector(lattice, f));
        if (!it_space.contains(vectors.back()))
          in_it = false;
      }
      independent =
          QMatrix::from_rows(std::move(vectors)).rank() == basis.size();
    };
    const Poset& p = lattice.poset();
    check(basis_b1(inst.family, inst.m, inst.n, p), row.b1_in_it,
          row.b1_independent, row.b1_size);
    check(basis_b2(inst.family, inst.m, inst.n, p), row.b2_in_it,
          row.b2_independent, row.b2_size);
    row.pass = row.b1_in_it && row.b2_in_it && row.b1_independent &&
               row.b2_independent && row.b1_size == row.dim_it &&
               row.b2_size == row.dim_it;
    return row;
  });
}

std::vector<RooksRow> suite_rooks(int trials, std::uint64_t seed,
                                  std::size_t max_cells,
                                  const EnumerationCaps& caps) {
  if (trials < 0)
    fail(errc::bad_parameter, "trials must be nonnegative");
  // Diagrams are drawn sequentially from one seeded stream so the sample set
  // depends only on (seed, trials); the per-diagram work runs in parallel.
  std::mt19937_64 rng(seed);
  std::vector<Diagram> samples;
  samples.reserve(trials);
  for (int t = 0; t < trials; ++t)
    samples.push_back(random_no_outward_corner_diagram(rng, max_cells));

  return parallel_rows<RooksRow>(samples.size(), [&](std::size_t i) {
    const Diagram& d = samples[i];
    const IdealLattice lattice = enumerate_ideals(Poset::from_diagram(d), caps);
    const Poset& p = lattice.poset();

    RooksRow row;
    row.index = i;
    row.num_cells = d.size();
    row.num_ideals = lattice.size();
    row.rank = p.rank();
    row.dim_it = static_cast<long long>(dim_it(lattice));
    row.dim_at = static_cast<long long>(dim_at(lattice));
    row.dims_match_rank =
        row.dim_it == row.rank + 1 && row.dim_at == row.rank + 1;

    row.rook_identity = true;
    for (const Cell& cell : d.cells()) {
      const Statistic r = rook(d, cell);
      for (std::size_t k = 0; k < lattice.size(); ++k)
        if (evaluate(p, r, lattice.ideal(k)) != 1) {
          row.rook_identity = false;
          break;
        }
      if (!row.rook_identity)
        break;
    }

    const SeChainRooks chain = se_chain_rooks(d, lattice);
    row.chain_length = chain.count;
    row.chain_independent = chain.independent;
    row.pass = row.dims_match_rank && row.rook_identity &&
               row.chain_independent &&
               row.chain_length == static_cast<std::size_t>(row.rank) + 1;
    return row;
  });
}

std::vector<HomomesyRow> suite_homomesy(int max_rect, int max_staircase,
                                        int max_type_a, int max_type_b,
                                        const EnumerationCaps& caps) {
  const auto sweep =
      family_sweep(max_rect, max_staircase, max_type_a, max_type_b);
  return parallel_rows<HomomesyRow>(sweep.size(), [&](std::size_t i) {
    const FamilyInstance& inst = sweep[i];
    const Diagram d = family_diagram(inst.family, inst.m, inst.n);
    const IdealLattice lattice = enumerate_ideals(Poset::from_diagram(d), caps);
    const auto cycles = orbits(lattice);

    HomomesyRow row;
    row.family = family_name(inst.family);
    row.params = inst.family == Family::rectangle
                     ? "m=" + std::to_string(inst.m) + ",n=" +
                           std::to_string(inst.n)
                     : "n=" + std::to_string(inst.n);
    row.num_orbits = cycles.size();
    row.pass = true;
    const Poset& p = lattice.poset();
    for (int e = 0; e < p.size(); ++e) {
      ++row.checked_statistics;
      for (const auto& orbit : cycles) {
        long long total = 0;
        for (std::size_t k : orbit)
          total += generator_value(p, GenKind::toggle, e, lattice.ideal(k));
        if (total != 0) {
          row.pass = false;
          break;
        }
      }
      if (!row.pass)
        break;
    }
    return row;
  });
}

std::vector<DeterminantRow> suite_determinant(int max_ell) {
  std::vector<DeterminantRow> rows;
  for (int ell = 2; ell <= max_ell; ++ell) {
    DeterminantRow row;
    row.ell = ell;
    row.det = tridiagonal_det(ell);
    row.predicted = Integer(ell + 1);
    if (ell % 2 != 0)
      row.predicted = -row.predicted;
    row.recurrence_ok =
        ell < 4 || row.det == Integer(-2) * tridiagonal_det(ell - 1) -
                                  tridiagonal_det(ell - 2);
    row.pass = (row.det == row.predicted) && row.recurrence_ok;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ConstraintsRow> suite_constraints(int max_rect, int max_staircase,
                                              int max_type_a, int max_type_b,
                                              const EnumerationCaps& caps) {
  const auto sweep =
      family_sweep(max_rect, max_staircase, max_type_a, max_type_b);
  return parallel_rows<ConstraintsRow>(sweep.size(), [&](std::size_t i) {
    const FamilyInstance& inst = sweep[i];
    const Diagram d = family_diagram(inst.family, inst.m, inst.n);
    const IdealLattice lattice = enumerate_ideals(Poset::from_diagram(d), caps);
    const Poset& p = lattice.poset();
    const Subspace it_space = ideal_toggle_space(lattice);

    ConstraintsRow row;
    row.family = family_name(inst.family);
    row.params = inst.family == Family::rectangle
                     ? "m=" + std::to_string(inst.m) + ",n=" +
                           std::to_string(inst.n)
                     : "n=" + std::to_string(inst.n);
    row.basis_dim = it_space.dim();
    row.diagonal_constant = true;
    row.constant_identity = true;

    // Root-zero cells: the second anti-diagonal of the root posets.
    std::vector<int> zero_cells;
    if (inst.family == Family::type_a || inst.family == Family::type_b) {
      const int target = inst.family == Family::type_a ? inst.n + 2
                                                       : 2 * inst.n + 1;
      for (int e = 0; e < p.size(); ++e)
        if (p.label(e).row + p.label(e).col == target)
          zero_cells.push_back(e);
      row.root_zero = true;
    }

    for (const QVector& v : it_space.basis()) {
      const ToggleDecomposition dec = decompose_toggle(lattice, v);
      // (i) equal coefficients across diamond-linked diagonal neighbors:
      // c_{i,j} = c_{i+1,j+1} whenever all four diamond cells are present.
      // On rectangles and type A this forces constancy along whole
      // diagonals; on staircases and type B the main-diagonal cells have no
      // diamonds and stay free (their toggles are individual basis members).
      for (int a = 0; a < p.size() && row.diagonal_constant; ++a) {
        const Cell c = p.label(a);
        const int b = p.element_at({c.row + 1, c.col + 1});
        if (b < 0 || p.element_at({c.row + 1, c.col}) < 0 ||
            p.element_at({c.row, c.col + 1}) < 0)
          continue;
        if (dec.coeffs[a] != dec.coeffs[b])
          row.diagonal_constant = false;
      }
      // (ii) c = -sum of the coefficients on Min(P).
      Rational min_total(0);
      for (int e = 0; e < p.size(); ++e)
        if ((p.minimals() >> e) & 1u)
          min_total += dec.coeffs[e];
      if (dec.constant != -min_total)
        row.constant_identity = false;
      // (iii) zero coefficients on the unique-double-cover cells.
      for (int e : zero_cells)
        if (dec.coeffs[e] != 0)
          row.root_zero = false;
    }
    row.pass = row.diagonal_constant && row.constant_identity &&
               row.root_zero.value_or(true);
    return row;
  });
}

} // namespace tgl
