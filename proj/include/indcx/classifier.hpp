#pragma once

#include <cstddef>
#include <functional>
#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "indcx/canonical.hpp"
#include "indcx/graph.hpp"
#include "indcx/graph6.hpp"

namespace indcx {

/// d(X|Y): the sphere dimension of the residual complex, or Star when it is not a sphere
/// (contractible, for the graphs the recursion is valid on).
struct DValue {
  bool star = true;
  int dim = 0;

  static DValue Star() { return {true, 0}; }
  static DValue Dim(int d) { return {false, d}; }

  std::string to_string() const { return star ? "*" : std::to_string(dim); }
  friend bool operator==(const DValue&, const DValue&) = default;
};

/// Homotopy type of I(G) for a ternary graph G.
struct HomotopyClass {
  bool contractible = true;
  int dim = 0;  ///< sphere dimension when !contractible; -1 for the empty complex

  static HomotopyClass Contractible() { return {true, 0}; }
  static HomotopyClass Sphere(int d) { return {false, d}; }

  static HomotopyClass from(DValue d) { return d.star ? Contractible() : Sphere(d.dim); }

  std::string to_string() const { return contractible ? "contractible" : "S^" + std::to_string(dim); }
  friend bool operator==(const HomotopyClass&, const HomotopyClass&) = default;
};

/// d(X|Y) from a = d(X∪{v}|Y) and b = d(X|Y∪{v}). The admissible triples
/// (d(X|Y), a, b) are (*,*,*), (k,*,k), (*,k,k) and (k+1,k,*); any other (a, b) pair has
/// unequal finite entries and yields nullopt.
inline std::optional<DValue> combine(DValue a, DValue b) {
  if (a.star) return b;
  if (b.star) return DValue::Dim(a.dim + 1);
  if (a.dim == b.dim) return DValue::Star();
  return std::nullopt;
}

/// Thrown when combine meets a pair that no ternary graph produces.
class NonTernaryDetected : public std::runtime_error {
 public:
  NonTernaryDetected(std::string residual_with, std::string residual_without, DValue a, DValue b,
                     std::vector<int> x, std::vector<int> y, int pivot)
      : std::runtime_error("forbidden combination (" + a.to_string() + ", " + b.to_string() + ") at pivot " +
                           std::to_string(pivot)),
        with_pivot(std::move(residual_with)),
        without_pivot(std::move(residual_without)),
        a(a),
        b(b),
        x(std::move(x)),
        y(std::move(y)),
        pivot(pivot) {}

  std::string with_pivot;     ///< graph6 of G(X∪{v}|Y)
  std::string without_pivot;  ///< graph6 of G(X|Y∪{v})
  DValue a, b;
  std::vector<int> x, y;  ///< in original vertex labels
  int pivot;              ///< original label of v
};

/// Chooses the branching vertex of a non-empty graph.
using PivotPolicy = std::function<int(const Graph&)>;

/// Maximum degree, ties to the least index.
inline int select_pivot(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("select_pivot: graph has no vertices");
  int best = 0;
  for (int v = 1; v < g.n(); ++v)
    if (g.degree(v) > g.degree(best)) best = v;
  return best;
}

inline int least_index_pivot(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("pivot: graph has no vertices");
  return 0;
}

/// Uniform pivot drawn from a seeded engine owned by the policy.
inline PivotPolicy random_pivot_policy(std::uint64_t seed) {
  auto engine = std::make_shared<std::mt19937_64>(seed);
  return [engine](const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("pivot: graph has no vertices");
    std::uniform_int_distribution<int> pick(0, g.n() - 1);
    return pick(*engine);
  };
}

/// Thread-safe least-recently-used map from canonical residual keys to d-values.
class MemoCache {
 public:
  static constexpr std::size_t kDefaultCapacity = std::size_t{1} << 20;

  explicit MemoCache(std::size_t capacity = kDefaultCapacity) : capacity_(capacity) {}

  std::optional<DValue> find(const std::string& key) {
    std::lock_guard lock(mutex_);
    auto it = index_.find(key);
    if (it == index_.end()) {
      ++misses_;
      return std::nullopt;
    }
    ++hits_;
    order_.splice(order_.begin(), order_, it->second);
    return it->second->second;
  }

  void insert(const std::string& key, DValue value) {
    if (capacity_ == 0) return;
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(key); it != index_.end()) {
      it->second->second = value;
      order_.splice(order_.begin(), order_, it->second);
      return;
    }
    order_.emplace_front(key, value);
    index_.emplace(key, order_.begin());
    if (index_.size() > capacity_) {
      index_.erase(order_.back().first);
      order_.pop_back();
    }
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return index_.size();
  }
  std::size_t capacity() const { return capacity_; }
  std::size_t hits() const {
    std::lock_guard lock(mutex_);
    return hits_;
  }
  std::size_t misses() const {
    std::lock_guard lock(mutex_);
    return misses_;
  }

 private:
  using Item = std::pair<std::string, DValue>;
  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::list<Item> order_;
  std::unordered_map<std::string, std::list<Item>::iterator> index_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

/// Homotopy type of I(G) for ternary G by the Mayer–Vietoris recursion on d(X|Y).
///
/// d(∅|∅) is resolved by branching on a pivot v into d({v}|∅) (the graph G - N[v]) and
/// d(∅|{v}) (the graph G - v), each computed recursively on the compacted residual graph,
/// then merged by combine. A vertex-free graph has d = -1; a graph with an isolated vertex
/// has a cone as its complex, so d = *. Results are memoized by canonical form, which makes
/// the cache independent of the pivot policy.
class Classifier {
 public:
  explicit Classifier(PivotPolicy pivot = select_pivot, std::size_t cache_capacity = MemoCache::kDefaultCapacity)
      : pivot_(std::move(pivot)), cache_(cache_capacity) {}

  /// Throws NonTernaryDetected when the recursion meets a forbidden pair. Not signalling
  /// does not certify that g is ternary.
  HomotopyClass classify(const Graph& g) {
    std::vector<int> origin(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) origin[static_cast<std::size_t>(v)] = v;
    return HomotopyClass::from(d_value(g, origin, {}, {}));
  }

  const MemoCache& cache() const { return cache_; }

 private:
  DValue d_value(const Graph& g, const std::vector<int>& origin, const std::vector<int>& x, const std::vector<int>& y) {
    if (g.n() == 0) return DValue::Dim(-1);
    if (g.has_isolated_vertex()) return DValue::Star();

    const std::string key = canonical_key(g);
    if (auto hit = cache_.find(key)) return *hit;

    const int v = pivot_(g);
    auto with = residual(g, VertexSet{v}, VertexSet{});
    auto without = residual(g, VertexSet{}, VertexSet{v});
    const int original_v = origin[static_cast<std::size_t>(v)];

    auto lift = [&](const std::vector<int>& local) {
      std::vector<int> out;
      out.reserve(local.size());
      for (int u : local) out.push_back(origin[static_cast<std::size_t>(u)]);
      return out;
    };
    std::vector<int> x_with = x;
    x_with.push_back(original_v);
    std::vector<int> y_without = y;
    y_without.push_back(original_v);

    const DValue a = d_value(with.graph, lift(with.origin), x_with, y);
    const DValue b = d_value(without.graph, lift(without.origin), x, y_without);
    auto merged = combine(a, b);
    if (!merged) throw NonTernaryDetected(encode_key(with.graph), encode_key(without.graph), a, b, x, y, original_v);
    cache_.insert(key, *merged);
    return *merged;
  }

  static std::string encode_key(const Graph& g) { return g.n() <= kGraph6MaxShort ? encode_graph6(g) : "(n>62)"; }

  PivotPolicy pivot_;
  MemoCache cache_;
};

/// One-shot classification with the default pivot policy and a private cache.
inline HomotopyClass classify(const Graph& g) {
  Classifier c;
  return c.classify(g);
}

/// Homotopy type of I(C_ℓ): a wedge of two k-spheres when ℓ = 3k+3, else S^k for
/// ℓ = 3k+2 or ℓ = 3k+4.
struct CycleComplexType {
  bool wedge = false;  ///< S^k ∨ S^k rather than S^k
  int dim = 0;

  std::string to_string() const {
    const std::string s = "S^" + std::to_string(dim);
    return wedge ? s + " v " + s : s;
  }
  friend bool operator==(const CycleComplexType&, const CycleComplexType&) = default;
};

inline CycleComplexType kozlov_oracle(int length) {
  if (length < 3) throw std::invalid_argument("cycle length must be >= 3, got " + std::to_string(length));
  switch (length % 3) {
    case 0: return {true, length / 3 - 1};
    case 2: return {false, (length - 2) / 3};
    default: return {false, (length - 4) / 3};
  }
}

}  // namespace indcx
