#include "togglelab/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "togglelab/error.hpp"

namespace tgl {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    fail(errc::bad_parameter, "partition needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      fail(errc::bad_parameter, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      fail(errc::bad_parameter, "partition parts must be weakly decreasing");
    boxes_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(piece, &used);
      if (used != piece.size())
        fail(errc::parse_error, "bad partition part: " + piece);
      parts.push_back(value);
    } catch (const error&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad partition part: " + piece);
    }
  }
  if (parts.empty())
    fail(errc::parse_error, "empty partition");
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void collect_partitions(int remaining, int max_part, std::vector<int>& stack,
                        std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(stack);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    stack.push_back(part);
    collect_partitions(remaining - part, part, stack, out);
    stack.pop_back();
  }
}

} // namespace

std::vector<Partition> Partition::all_with_at_most(int max_boxes) {
  std::vector<Partition> out;
  std::vector<int> stack;
  for (int boxes = 1; boxes <= max_boxes; ++boxes)
    collect_partitions(boxes, boxes, stack, out);
  return out;
}

// ---------------------------------------------------------------------------
// Diagram

Diagram Diagram::from_cells(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  if (cells.empty())
    fail(errc::empty_diagram, "diagram has no cells");
  Diagram d;
  d.min_row_ = d.max_row_ = cells.front().row;
  d.min_col_ = d.max_col_ = cells.front().col;
  for (const Cell& c : cells) {
    if (c.row < 1 || c.col < 1)
      fail(errc::bad_parameter, "cell coordinates are 1-based positives");
    d.min_row_ = std::min(d.min_row_, c.row);
    d.max_row_ = std::max(d.max_row_, c.row);
    d.min_col_ = std::min(d.min_col_, c.col);
    d.max_col_ = std::max(d.max_col_, c.col);
  }
  d.cells_ = std::move(cells);
  return d;
}

Diagram Diagram::from_text(const std::string& text) {
  std::vector<Cell> cells;
  int row = 1;
  int col = 1;
  for (char ch : text) {
    if (ch == '\n') {
      ++row;
      col = 1;
      continue;
    }
    if (ch == '\r')
      continue;
    if (ch == '#')
      cells.push_back({row, col});
    else if (ch != '.')
      fail(errc::bad_character,
           std::string("unexpected character '") + ch + "' at row " +
               std::to_string(row) + ", column " + std::to_string(col));
    ++col;
  }
  if (cells.empty())
    fail(errc::empty_diagram, "diagram text contains no '#'");
  return from_cells(std::move(cells));
}

Diagram Diagram::from_json(const std::string& json_text) {
  json parsed;
  try {
    parsed = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(errc::parse_error, std::string("bad diagram JSON: ") + e.what());
  }
  if (!parsed.is_object() || !parsed.contains("cells") ||
      !parsed["cells"].is_array())
    fail(errc::parse_error, "diagram JSON must be {\"cells\": [[i,j], ...]}");
  std::vector<Cell> cells;
  for (const auto& entry : parsed["cells"]) {
    if (!entry.is_array() || entry.size() != 2 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer())
      fail(errc::parse_error, "diagram JSON cells must be [i, j] pairs");
    cells.push_back({entry[0].get<int>(), entry[1].get<int>()});
  }
  if (cells.empty())
    fail(errc::empty_diagram, "diagram JSON has no cells");
  return from_cells(std::move(cells));
}

Diagram Diagram::rectangle(int m, int n) {
  if (m < 1 || n < 1)
    fail(errc::bad_parameter, "rectangle needs m, n >= 1");
  std::vector<Cell> cells;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      cells.push_back({i, j});
  return from_cells(std::move(cells));
}

Diagram Diagram::shifted_staircase(int n) {
  if (n < 1)
    fail(errc::bad_parameter, "shifted staircase needs n >= 1");
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      cells.push_back({i, j});
  return from_cells(std::move(cells));
}

Diagram Diagram::type_a_root(int n) {
  if (n < 2)
    fail(errc::bad_parameter, "type A root poset needs n >= 2");
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i + j >= n + 1)
        cells.push_back({i, j});
  return from_cells(std::move(cells));
}

Diagram Diagram::type_b_root(int n) {
  if (n < 2)
    fail(errc::bad_parameter, "type B root poset needs n >= 2");
  std::vector<Cell> cells;
  for (int i = n; i <= 2 * n - 1; ++i)
    for (int j = 2 * n - i; j <= i; ++j)
      cells.push_back({i, j});
  return from_cells(std::move(cells));
}

Diagram Diagram::ferrers(const Partition& lambda) {
  std::vector<Cell> cells;
  const auto& parts = lambda.parts();
  for (int i = 1; i <= static_cast<int>(parts.size()); ++i)
    for (int j = 1; j <= parts[i - 1]; ++j)
      cells.push_back({i, j});
  return from_cells(std::move(cells));
}

bool Diagram::contains(int row, int col) const {
  return std::binary_search(cells_.begin(), cells_.end(), Cell{row, col});
}

int Diagram::cell_index(Cell c) const {
  const auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it == cells_.end() || !(*it == c))
    return -1;
  return static_cast<int>(it - cells_.begin());
}

std::string Diagram::to_text() const {
  // Absolute coordinates are preserved: row 1 is always the first line, so
  // parsing the text reproduces the same cell set.
  std::string out;
  for (int i = 1; i <= max_row_; ++i) {
    int last = 0;
    for (int j = 1; j <= max_col_; ++j)
      if (contains(i, j))
        last = j;
    for (int j = 1; j <= last; ++j)
      out += contains(i, j) ? '#' : '.';
    out += '\n';
  }
  return out;
}

std::string Diagram::to_json() const {
  json cells = json::array();
  for (const Cell& c : cells_)
    cells.push_back({c.row, c.col});
  return json{{"cells", cells}}.dump();
}

// ---------------------------------------------------------------------------
// Predicates

namespace {

bool diagram_connected(const Diagram& d) {
  const auto& cells = d.cells();
  std::vector<bool> seen(cells.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  const auto index_of = [&](int r, int c) -> std::size_t {
    const auto it =
        std::lower_bound(cells.begin(), cells.end(), Cell{r, c});
    if (it == cells.end() || !(*it == Cell{r, c}))
      return cells.size();
    return static_cast<std::size_t>(it - cells.begin());
  };
  while (!stack.empty()) {
    const Cell cur = cells[stack.back()];
    stack.pop_back();
    const Cell neighbors[4] = {{cur.row - 1, cur.col},
                               {cur.row + 1, cur.col},
                               {cur.row, cur.col - 1},
                               {cur.row, cur.col + 1}};
    for (const Cell& nb : neighbors) {
      const std::size_t k = index_of(nb.row, nb.col);
      if (k < cells.size() && !seen[k]) {
        seen[k] = true;
        ++reached;
        stack.push_back(k);
      }
    }
  }
  return reached == cells.size();
}

bool interval_convex(const Diagram& d, bool by_row) {
  std::map<int, std::pair<int, int>> extent; // line -> [min, max] cross coord
  std::map<int, int> count;
  for (const Cell& c : d.cells()) {
    const int line = by_row ? c.row : c.col;
    const int cross = by_row ? c.col : c.row;
    auto [it, fresh] = extent.try_emplace(line, cross, cross);
    if (!fresh) {
      it->second.first = std::min(it->second.first, cross);
      it->second.second = std::max(it->second.second, cross);
    }
    ++count[line];
  }
  for (const auto& [line, span] : extent)
    if (span.second - span.first + 1 != count[line])
      return false;
  return true;
}

bool diagram_simply_connected(const Diagram& d) {
  for (int i = d.min_row(); i <= d.max_row(); ++i)
    for (int j = d.min_col(); j <= d.max_col(); ++j)
      if (!d.contains(i, j) && d.contains(i - 1, j) && d.contains(i + 1, j) &&
          d.contains(i, j - 1) && d.contains(i, j + 1))
        return false;
  return true;
}

/// A vertex (r, c) sits at the southeast corner of cell (r, c); the cells
/// around it are NW = (r,c), NE = (r,c+1), SW = (r+1,c), SE = (r+1,c+1).
/// A corner whose two boundary edges leave the vertex west and north has the
/// NW cell differing from the other three; south-and-east corners have the
/// SE cell differing.
std::vector<BoundaryCorner> corners_of_kind(const Diagram& d, bool en_kind) {
  std::vector<BoundaryCorner> out;
  for (int r = d.min_row() - 1; r <= d.max_row() + 1; ++r) {
    for (int c = d.min_col() - 1; c <= d.max_col() + 1; ++c) {
      const bool nw = d.contains(r, c);
      const bool ne = d.contains(r, c + 1);
      const bool sw = d.contains(r + 1, c);
      const bool se = d.contains(r + 1, c + 1);
      if (en_kind) {
        if (ne == sw && sw == se && nw != se)
          out.push_back({r, c, nw});
      } else {
        if (nw == ne && ne == sw && se != nw)
          out.push_back({r, c, se});
      }
    }
  }
  return out;
}

} // namespace

std::vector<BoundaryCorner> en_corners(const Diagram& d) {
  return corners_of_kind(d, true);
}

std::vector<BoundaryCorner> ne_corners(const Diagram& d) {
  return corners_of_kind(d, false);
}

DiagramPredicates predicates(const Diagram& d) {
  DiagramPredicates p;
  p.connected = diagram_connected(d);
  p.row_convex = interval_convex(d, true);
  p.column_convex = interval_convex(d, false);
  p.simply_connected = diagram_simply_connected(d);

  p.no_outward_corners = true;
  for (const BoundaryCorner& corner : en_corners(d)) {
    for (const Cell& cell : d.cells())
      if (cell.row > corner.r && cell.col > corner.c) {
        p.no_outward_corners = false;
        break;
      }
    if (!p.no_outward_corners)
      break;
  }
  if (p.no_outward_corners) {
    for (const BoundaryCorner& corner : ne_corners(d)) {
      for (const Cell& cell : d.cells())
        if (cell.row <= corner.r && cell.col <= corner.c) {
          p.no_outward_corners = false;
          break;
        }
      if (!p.no_outward_corners)
        break;
    }
  }
  return p;
}

bool no_se_outward_corners(const Diagram& d, Cell cell) {
  for (const BoundaryCorner& corner : ne_corners(d))
    if (corner.r >= cell.row && corner.c >= cell.col)
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Border strips

BorderStrip border_strip(const Partition& lambda) {
  const Diagram shape = Diagram::ferrers(lambda);
  BorderStrip strip;
  for (const Cell& c : shape.cells())
    if (!shape.contains(c.row + 1, c.col + 1))
      strip.cells.push_back(c);
  const auto in_strip = [&](int r, int c) {
    return std::binary_search(strip.cells.begin(), strip.cells.end(),
                              Cell{r, c});
  };
  for (const Cell& c : strip.cells)
    if (in_strip(c.row + 1, c.col) && in_strip(c.row, c.col + 1))
      strip.corners.push_back(c);
  return strip;
}

bool diagonal_bijection_holds(const Partition& lambda) {
  const Diagram shape = Diagram::ferrers(lambda);
  const BorderStrip strip = border_strip(lambda);
  std::set<int> strip_diagonals;
  for (const Cell& c : strip.cells)
    if (!strip_diagonals.insert(c.row - c.col).second)
      return false; // not injective
  std::set<int> shape_diagonals;
  for (const Cell& c : shape.cells())
    shape_diagonals.insert(c.row - c.col);
  return strip_diagonals == shape_diagonals;
}

// ---------------------------------------------------------------------------
// Random no-outward-corner diagrams

Diagram random_no_outward_corner_diagram(std::mt19937_64& rng,
                                         std::size_t max_cells) {
  if (max_cells < 1)
    fail(errc::bad_parameter, "max_cells must be positive");
  const auto uniform = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  for (;;) {
    const int m = uniform(1, 5);
    const int n = uniform(1, 8);

    // Row ends from the bottom up, then row starts from the top down; the
    // constraints a_r <= min(b_{r-1}, b_r) keep consecutive rows overlapping,
    // which is exactly the two-monotone-path condition.
    std::vector<int> row_end(m + 1), row_start(m + 1);
    row_end[m] = n;
    for (int r = m - 1; r >= 1; --r)
      row_end[r] = uniform(1, row_end[r + 1]);
    row_start[1] = 1;
    for (int r = 2; r <= m; ++r)
      row_start[r] =
          uniform(row_start[r - 1], std::min(row_end[r - 1], row_end[r]));

    std::size_t total = 0;
    for (int r = 1; r <= m; ++r)
      total += static_cast<std::size_t>(row_end[r] - row_start[r] + 1);
    if (total > max_cells)
      continue;

    std::vector<Cell> cells;
    for (int r = 1; r <= m; ++r)
      for (int c = row_start[r]; c <= row_end[r]; ++c)
        cells.push_back({r, c});
    Diagram d = Diagram::from_cells(std::move(cells));
    const DiagramPredicates p = predicates(d);
    if (p.connected && p.simply_connected && p.no_outward_corners)
      return d;
    // The construction should never fail the filter; resample if it does.
  }
}

} // namespace tgl
