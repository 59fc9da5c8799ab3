#ifndef TOGGLELAB_DIAGRAM_HPP
#define TOGGLELAB_DIAGRAM_HPP

#include <compare>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace tgl {

/// One unit cell in matrix coordinates: row grows southward, col eastward,
/// both 1-based.
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A weakly decreasing sequence of positive parts.
class Partition {
public:
  explicit Partition(std::vector<int> parts);

  /// Parses "5,2,1,1". Throws parse_error / bad_parameter.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int boxes() const { return boxes_; }

  std::string to_string() const;

  /// Every partition with 1..max_boxes boxes, parts descending, ordered by
  /// box count then lexicographically. Deterministic.
  static std::vector<Partition> all_with_at_most(int max_boxes);

private:
  std::vector<int> parts_;
  int boxes_ = 0;
};

/// A finite nonempty set of cells. Cells are kept sorted by (row, col);
/// that order is the canonical element order everywhere downstream.
class Diagram {
public:
  static Diagram from_cells(std::vector<Cell> cells);

  /// '#' = cell, '.' = hole, first line = row 1. Lines may be ragged.
  /// Throws empty_diagram / bad_character.
  static Diagram from_text(const std::string& text);

  /// {"cells": [[i,j], ...]} with 1-based integers.
  static Diagram from_json(const std::string& json_text);

  static Diagram rectangle(int m, int n);
  static Diagram shifted_staircase(int n);
  static Diagram type_a_root(int n);
  static Diagram type_b_root(int n);
  static Diagram ferrers(const Partition& lambda);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(int row, int col) const;
  bool contains(Cell c) const { return contains(c.row, c.col); }

  /// Position of a cell in the canonical (row, col) order, or -1. Matches
  /// the element indexing of the poset built from this diagram.
  int cell_index(Cell c) const;

  int min_row() const { return min_row_; }
  int max_row() const { return max_row_; }
  int min_col() const { return min_col_; }
  int max_col() const { return max_col_; }

  std::string to_text() const;
  std::string to_json() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

private:
  std::vector<Cell> cells_;
  int min_row_ = 0, max_row_ = 0, min_col_ = 0, max_col_ = 0;
};

struct DiagramPredicates {
  bool connected = false;
  bool row_convex = false;
  bool column_convex = false;
  bool simply_connected = false;
  bool no_outward_corners = false;
};

DiagramPredicates predicates(const Diagram& d);

/// A boundary corner of a diagram. EN corners have their two boundary edges
/// extending west and north of the vertex; NE corners south and east. The
/// vertex (r, c) is the grid point at the southeast corner of cell (r, c).
struct BoundaryCorner {
  int r = 0;
  int c = 0;
  bool convex = false;
};

std::vector<BoundaryCorner> en_corners(const Diagram& d);
std::vector<BoundaryCorner> ne_corners(const Diagram& d);

/// True when no NE boundary corner lies weakly southeast of the cell
/// (vertex (r,c) with r >= row and c >= col). This is the per-cell
/// hypothesis of the half-rook identity.
bool no_se_outward_corners(const Diagram& d, Cell cell);

/// Border strip of a Ferrers shape: cells (i,j) with (i+1,j+1) outside,
/// plus its corner cells (both south and east neighbors in the strip).
struct BorderStrip {
  std::vector<Cell> cells;
  std::vector<Cell> corners;

  int n() const { return static_cast<int>(cells.size()); }
  int c() const { return static_cast<int>(corners.size()); }
};

BorderStrip border_strip(const Partition& lambda);

/// Checks that (i,j) -> i-j restricted to the border strip is injective and
/// hits exactly the diagonals of the full shape.
bool diagonal_bijection_holds(const Partition& lambda);

/// Samples the region between two monotone southeast lattice paths that share
/// endpoints and touch nowhere else. Such regions are exactly the simply
/// connected diagrams with no outward corners; the predicates are re-checked
/// on every sample before returning.
Diagram random_no_outward_corner_diagram(std::mt19937_64& rng,
                                         std::size_t max_cells);

} // namespace tgl

#endif
