#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "indcx/canonical.hpp"
#include "indcx/graph.hpp"

namespace indcx {

/// Largest n accepted for isomorphism-deduplicated enumeration.
inline constexpr int kMaxDedupOrder = 8;
/// Largest n for labeled enumeration (edge subsets indexed by one 64-bit counter).
inline constexpr int kMaxLabeledOrder = 11;

/// Non-isomorphic graphs on n vertices, one canonical representative each, in the
/// order of their canonical graph6 encodings.
///
/// Built by vertex augmentation: every graph on n vertices arises from one on n-1
/// vertices by adding a vertex with some neighborhood.
inline std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 0 || n > kMaxDedupOrder)
    throw std::invalid_argument("dedup enumeration supports 0 <= n <= 8, got " + std::to_string(n));
  std::vector<Graph> level{Graph(0)};
  constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();
  for (int k = 1; k <= n; ++k) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& base : level) {
      for (Mask nb = 0; nb < bit(k - 1); ++nb) {
        Graph g(k);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for_each_bit(nb, [&](int u) { g.add_edge(u, k - 1); });
        auto cf = canonical_form(g, unlimited);
        std::string key = encode_graph6(cf->graph);
        if (seen.insert(key).second) next.push_back(std::move(cf->graph));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const Graph& a, const Graph& b) { return encode_graph6(a) < encode_graph6(b); });
    level = std::move(next);
  }
  return level;
}

/// Single-consumer stream of graphs on n vertices: either every labeled graph (edge subsets
/// in counter order) or one representative per isomorphism class.
class GraphStream {
 public:
  GraphStream(int n, bool dedup) : n_(n), dedup_(dedup) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    if (dedup) {
      pool_ = nonisomorphic_graphs(n);
    } else {
      if (n > kMaxLabeledOrder)
        throw std::invalid_argument("labeled enumeration supports n <= 11, got " + std::to_string(n));
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs_.emplace_back(i, j);
    }
  }

  std::optional<Graph> next() {
    if (dedup_) {
      if (cursor_ >= pool_.size()) return std::nullopt;
      return pool_[cursor_++];
    }
    if (cursor_ >= (std::uint64_t{1} << pairs_.size())) return std::nullopt;
    Graph g(n_);
    const std::uint64_t subset = cursor_++;
    for (std::size_t e = 0; e < pairs_.size(); ++e)
      if ((subset >> e) & 1) g.add_edge(pairs_[e].first, pairs_[e].second);
    return g;
  }

 private:
  int n_;
  bool dedup_;
  std::uint64_t cursor_ = 0;
  std::vector<Graph> pool_;
  std::vector<std::pair<int, int>> pairs_;
};

inline GraphStream enumerate_graphs(int n, bool dedup) { return GraphStream(n, dedup); }

}  // namespace indcx
