#include "togglelab/poset.hpp"

#include <algorithm>
#include <bit>

#include <nlohmann/json.hpp>

#include "togglelab/error.hpp"

namespace tgl {

using nlohmann::json;

Poset Poset::from_diagram(const Diagram& d) {
  if (d.size() > kMaxPosetElements)
    fail(errc::cap_exceeded,
         "poset would have " + std::to_string(d.size()) +
             " elements; the hard cap is " + std::to_string(kMaxPosetElements));

  Poset p;
  p.n_ = static_cast<int>(d.size());
  p.labels_ = d.cells(); // already lex sorted: a linear extension

  const auto cell_leq = [](Cell a, Cell b) {
    return a.row <= b.row && a.col <= b.col;
  };

  p.down_.assign(p.n_, 0);
  p.up_.assign(p.n_, 0);
  for (int a = 0; a < p.n_; ++a)
    for (int b = 0; b < p.n_; ++b)
      if (cell_leq(p.labels_[a], p.labels_[b])) {
        p.up_[a] |= ElementMask(1) << b;
        p.down_[b] |= ElementMask(1) << a;
      }

  // Covers = transitive reduction: a < b with nothing strictly between,
  // i.e. the interval mask [a, b] holds exactly {a, b}.
  p.uc_mask_.assign(p.n_, 0);
  p.lc_mask_.assign(p.n_, 0);
  p.upper_covers_.assign(p.n_, {});
  p.lower_covers_.assign(p.n_, {});
  for (int a = 0; a < p.n_; ++a) {
    for (int b = a + 1; b < p.n_; ++b) {
      if (!p.leq(a, b))
        continue;
      const ElementMask between = p.up_[a] & p.down_[b];
      if (std::popcount(between) == 2) {
        p.uc_mask_[a] |= ElementMask(1) << b;
        p.lc_mask_[b] |= ElementMask(1) << a;
        p.upper_covers_[a].push_back(b);
        p.lower_covers_[b].push_back(a);
      }
    }
  }

  for (int e = 0; e < p.n_; ++e) {
    if (p.lower_covers_[e].empty())
      p.minimals_ |= ElementMask(1) << e;
    if (p.upper_covers_[e].empty())
      p.maximals_ |= ElementMask(1) << e;
  }
  return p;
}

int Poset::element_at(Cell c) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), c);
  if (it == labels_.end() || !(*it == c))
    return -1;
  return static_cast<int>(it - labels_.begin());
}

ElementMask Poset::all() const {
  return n_ == 64 ? ~ElementMask(0) : (ElementMask(1) << n_) - 1;
}

int Poset::rank() const {
  // Longest path over covers; indices are a linear extension.
  std::vector<int> height(n_, 1);
  int best = n_ > 0 ? 1 : 0;
  for (int b = 0; b < n_; ++b) {
    for (int a : lower_covers_[b])
      height[b] = std::max(height[b], height[a] + 1);
    best = std::max(best, height[b]);
  }
  return best - 1;
}

int Poset::width() const {
  // Dilworth: max antichain = n - maximum matching on the strict
  // comparability relation (split bipartite, Kuhn's augmenting paths).
  std::vector<int> match_right(n_, -1);
  std::vector<bool> visited;

  const auto try_augment = [&](auto&& self, int a) -> bool {
    for (int b = 0; b < n_; ++b) {
      if (a == b || !leq(a, b) || visited[b])
        continue;
      visited[b] = true;
      if (match_right[b] < 0 || self(self, match_right[b])) {
        match_right[b] = a;
        return true;
      }
    }
    return false;
  };

  int matching = 0;
  for (int a = 0; a < n_; ++a) {
    visited.assign(n_, false);
    if (try_augment(try_augment, a))
      ++matching;
  }
  return n_ - matching;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n_; ++a)
    for (int b : upper_covers_[a])
      pairs.emplace_back(a, b);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::string Poset::to_json() const {
  json elements = json::array();
  for (const Cell& c : labels_)
    elements.push_back({c.row, c.col});
  json covers = json::array();
  for (const auto& [a, b] : cover_pairs())
    covers.push_back({a, b});
  return json{{"covers", covers}, {"elements", elements}}.dump();
}

} // namespace tgl
