#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indcx {

/// Upper bound on vertices in a Graph; vertex sets are single machine words.
inline constexpr int kMaxVertices = 64;

using Mask = std::uint64_t;

inline constexpr Mask bit(int v) { return Mask{1} << v; }

inline constexpr Mask low_bits(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }

/// Lowest set bit index; undefined for m == 0.
inline int lowest(Mask m) { return std::countr_zero(m); }

/// Calls fn(v) for every set bit v in ascending order.
template <typename Fn>
inline void for_each_bit(Mask m, Fn&& fn) {
  while (m) {
    fn(lowest(m));
    m &= m - 1;
  }
}

/// A set of vertices of some host graph, stored as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  static VertexSet from_vector(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr Mask bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return popcount(bits_); }
  bool contains(int v) const { return v >= 0 && v < 64 && (bits_ >> v) & 1; }

  void insert(int v) {
    if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex index out of range");
    bits_ |= bit(v);
  }
  void erase(int v) { bits_ &= ~bit(v); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each_bit(bits_, [&](int v) { out.push_back(v); });
    return out;
  }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend bool operator==(VertexSet a, VertexSet b) = default;

 private:
  Mask bits_ = 0;
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Symmetric and loop-free by construction; immutable once built except through
/// add_edge during construction.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("graph vertex count must be in [0, 64], got " + std::to_string(n));
  }

  Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int n() const { return n_; }
  Mask vertices() const { return low_bits(n_); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
  }

  /// Open neighborhood N(v) as a bitmask.
  Mask adj(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  /// Raw rows without bounds checks for hot loops.
  const std::vector<Mask>& rows() const { return adj_; }

  int degree(int v) const { return popcount(adj(v)); }

  int edge_count() const {
    int m = 0;
    for (Mask row : adj_) m += popcount(row);
    return m / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for_each_bit(adj_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
  }

  /// True if no two members of s are adjacent.
  bool is_independent(Mask s) const {
    Mask rest = s;
    while (rest) {
      int v = lowest(rest);
      rest &= rest - 1;
      if (adj_[v] & s) return false;
    }
    return true;
  }

  /// Union of closed neighborhoods N[W].
  Mask closed_neighborhood_of(Mask w) const {
    Mask out = w;
    for_each_bit(w, [&](int v) { out |= adj_[v]; });
    return out;
  }

  bool has_isolated_vertex() const {
    for (Mask row : adj_)
      if (row == 0) return true;
    return false;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }

  int n_ = 0;
  std::vector<Mask> adj_;
};

/// N[v] = N(v) ∪ {v}.
inline VertexSet closed_neighborhood(const Graph& g, int v) { return VertexSet(g.adj(v) | bit(v)); }

/// Subgraph induced on `keep`, compacted so that surviving vertices keep their relative order.
/// origin[i] is the index in g of new vertex i.
struct InducedGraph {
  Graph graph;
  std::vector<int> origin;
};

inline InducedGraph induced_subgraph(const Graph& g, Mask keep) {
  keep &= g.vertices();
  std::array<int, kMaxVertices> index{};
  std::vector<int> origin;
  origin.reserve(static_cast<std::size_t>(popcount(keep)));
  for_each_bit(keep, [&](int v) {
    index[static_cast<std::size_t>(v)] = static_cast<int>(origin.size());
    origin.push_back(v);
  });
  Graph h(static_cast<int>(origin.size()));
  const auto& rows = g.rows();
  for (std::size_t i = 0; i < origin.size(); ++i) {
    Mask nb = rows[static_cast<std::size_t>(origin[i])] & keep;
    for_each_bit(nb, [&](int u) {
      int j = index[static_cast<std::size_t>(u)];
      if (static_cast<std::size_t>(j) > i) h.add_edge(static_cast<int>(i), j);
    });
  }
  return {std::move(h), std::move(origin)};
}

/// G(X|Y): the subgraph induced by V - N[X] - Y.
inline InducedGraph residual(const Graph& g, VertexSet x, VertexSet y) {
  const Mask all = g.vertices();
  if ((x.bits() & ~all) || (y.bits() & ~all))
    throw std::out_of_range("residual: vertex set exceeds graph range");
  if (x.bits() & y.bits()) throw std::invalid_argument("residual: X and Y overlap");
  if (!g.is_independent(x.bits())) throw std::invalid_argument("residual: X is not independent");
  Mask keep = all & ~g.closed_neighborhood_of(x.bits()) & ~y.bits();
  return induced_subgraph(g, keep);
}

/// Relabels g so that new vertex i is old vertex perm[i].
inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
  const int n = g.n();
  std::vector<int> inverse(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inverse[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  Graph h(n);
  for (auto [u, v] : g.edges()) h.add_edge(inverse[static_cast<std::size_t>(u)], inverse[static_cast<std::size_t>(v)]);
  return h;
}

// Named families used throughout tests and the CLI.

inline Graph cycle_graph(int len) {
  if (len < 3) throw std::invalid_argument("cycle length must be >= 3");
  Graph g(len);
  for (int i = 0; i < len; ++i) g.add_edge(i, (i + 1) % len);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

/// Disjoint union with b's vertices shifted after a's.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.n(), v + a.n());
  return g;
}

}  // namespace indcx
