#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indcx/graph.hpp"
#include "indcx/graph6.hpp"

namespace indcx {

/// A relabeling of g into its canonical representative.
/// order[i] is the original vertex placed at canonical position i.
struct CanonicalForm {
  Graph graph;
  std::vector<int> order;
};

namespace detail {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

/// Refines `p` to the coarsest equitable partition below it. Cells are split by neighbor
/// counts into earlier cells and ordered by those counts, so the procedure commutes with
/// relabeling.
inline void refine(const std::vector<Mask>& rows, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t si = 0; si < p.size() && !changed; ++si) {
      Mask splitter = 0;
      for (int v : p[si]) splitter |= bit(v);
      for (std::size_t ci = 0; ci < p.size(); ++ci) {
        Cell& cell = p[ci];
        if (cell.size() < 2) continue;
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) keyed.emplace_back(popcount(rows[static_cast<std::size_t>(v)] & splitter), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        if (keyed.front().first == keyed.back().first) continue;
        Partition pieces;
        for (std::size_t k = 0; k < keyed.size(); ++k) {
          if (k == 0 || keyed[k].first != keyed[k - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[k].second);
        }
        for (Cell& piece : pieces) std::sort(piece.begin(), piece.end());
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(ci));
        p.insert(p.begin() + static_cast<std::ptrdiff_t>(ci), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

/// Adjacency rows of g relabeled so that position i holds vertex order[i].
inline std::vector<Mask> relabeled_rows(const std::vector<Mask>& rows, const std::vector<int>& order) {
  const std::size_t n = order.size();
  std::vector<int> pos(rows.size(), -1);
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<Mask> out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for_each_bit(rows[static_cast<std::size_t>(order[i])], [&](int u) {
      if (pos[static_cast<std::size_t>(u)] >= 0) out[i] |= bit(pos[static_cast<std::size_t>(u)]);
    });
  return out;
}

/// Individualization-refinement search for the lexicographically least relabeled adjacency,
/// restricted to the vertices present in the initial partition.
class CanonicalSearch {
 public:
  CanonicalSearch(const std::vector<Mask>& rows, std::size_t leaf_budget) : rows_(rows), budget_(leaf_budget) {}

  /// Returns false if the leaf budget ran out.
  bool run(Partition p) {
    refine(rows_, p);
    descend(p);
    return !exhausted_;
  }

  const std::vector<int>& best_order() const { return best_order_; }

 private:
  bool twins(int u, int w) const {
    const Mask nu = rows_[static_cast<std::size_t>(u)] & ~bit(w);
    const Mask nw = rows_[static_cast<std::size_t>(w)] & ~bit(u);
    return nu == nw;
  }

  void descend(const Partition& p) {
    if (exhausted_) return;
    auto target = std::find_if(p.begin(), p.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == p.end()) {
      if (++leaves_ > budget_) {
        exhausted_ = true;
        return;
      }
      std::vector<int> order;
      order.reserve(p.size());
      for (const Cell& c : p) order.push_back(c.front());
      auto encoded = relabeled_rows(rows_, order);
      if (best_order_.empty() || encoded < best_rows_) {
        best_rows_ = std::move(encoded);
        best_order_ = std::move(order);
      }
      return;
    }
    const std::size_t ti = static_cast<std::size_t>(target - p.begin());
    std::vector<int> tried;
    for (int v : *target) {
      // Swapping twins is an automorphism fixing p, so their subtrees yield the same leaves.
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Partition child;
      child.reserve(p.size() + 1);
      child.insert(child.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(ti));
      child.push_back({v});
      Cell rest;
      for (int u : p[ti])
        if (u != v) rest.push_back(u);
      child.push_back(std::move(rest));
      child.insert(child.end(), p.begin() + static_cast<std::ptrdiff_t>(ti) + 1, p.end());
      refine(rows_, child);
      descend(child);
      if (exhausted_) return;
    }
  }

  const std::vector<Mask>& rows_;
  std::size_t budget_;
  std::size_t leaves_ = 0;
  bool exhausted_ = false;
  std::vector<int> best_order_;
  std::vector<Mask> best_rows_;
};

inline std::vector<Mask> components(const Graph& g) {
  std::vector<Mask> out;
  Mask unseen = g.vertices();
  const auto& rows = g.rows();
  while (unseen) {
    Mask comp = bit(lowest(unseen));
    Mask frontier = comp;
    while (frontier) {
      Mask grow = 0;
      for_each_bit(frontier, [&](int v) { grow |= rows[static_cast<std::size_t>(v)]; });
      frontier = grow & ~comp;
      comp |= grow;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

}  // namespace detail

/// Default cap on search-tree leaves per connected component.
inline constexpr std::size_t kDefaultLeafBudget = std::size_t{1} << 14;

/// Canonical relabeling: isomorphic graphs map to identical `graph` members.
///
/// Each connected component is labeled by individualization-refinement (exhaustive over the
/// search tree, pruning only twin swaps); components are then placed by (size, encoding).
/// Returns nullopt if some component needs more than `leaf_budget` leaves.
inline std::optional<CanonicalForm> canonical_form(const Graph& g, std::size_t leaf_budget = kDefaultLeafBudget) {
  struct Piece {
    std::vector<int> order;
    std::vector<Mask> rows;
  };
  std::vector<Piece> pieces;
  for (Mask comp : detail::components(g)) {
    Piece piece;
    if (popcount(comp) == 1) {
      piece.order = {lowest(comp)};
    } else {
      // Initial partition: component vertices grouped by degree, ascending.
      std::vector<int> verts;
      for_each_bit(comp, [&](int v) { verts.push_back(v); });
      std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
      detail::Partition p;
      for (std::size_t k = 0; k < verts.size(); ++k) {
        if (k == 0 || g.degree(verts[k]) != g.degree(verts[k - 1])) p.emplace_back();
        p.back().push_back(verts[k]);
      }
      detail::CanonicalSearch search(g.rows(), leaf_budget);
      if (!search.run(std::move(p))) return std::nullopt;
      piece.order = search.best_order();
    }
    piece.rows = detail::relabeled_rows(g.rows(), piece.order);
    pieces.push_back(std::move(piece));
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.order.size() != b.order.size()) return a.order.size() < b.order.size();
    return a.rows < b.rows;
  });
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(g.n()));
  for (const Piece& piece : pieces) order.insert(order.end(), piece.order.begin(), piece.order.end());
  return CanonicalForm{permuted(g, order), std::move(order)};
}

/// Memo key for g: graph6 of the canonical form when one is found within budget, otherwise a
/// '!'-prefixed graph6 of g as labeled. Equal keys always imply isomorphic graphs.
inline std::string canonical_key(const Graph& g, std::size_t leaf_budget = kDefaultLeafBudget) {
  auto encode = [](const Graph& h) {
    if (h.n() <= kGraph6MaxShort) return encode_graph6(h);
    // Beyond graph6 short form: raw adjacency words behind a marker byte.
    std::string raw(1, '#');
    for (Mask row : h.rows()) raw.append(reinterpret_cast<const char*>(&row), sizeof row);
    return raw;
  };
  if (auto cf = canonical_form(g, leaf_budget)) return encode(cf->graph);
  return "!" + encode(g);
}

}  // namespace indcx
