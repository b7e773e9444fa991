#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "indcx/graph.hpp"

namespace indcx {

/// Sparse integer matrix with exact 64-bit entries. Rows are kept as column-sorted
/// (col, value) lists; zero entries are never stored.
class IntegerMatrix {
 public:
  using Entry = std::pair<std::size_t, std::int64_t>;
  using Row = std::vector<Entry>;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static IntegerMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
    const std::size_t cols = dense.empty() ? 0 : dense.front().size();
    IntegerMatrix m(dense.size(), cols);
    for (std::size_t r = 0; r < dense.size(); ++r) {
      if (dense[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, dense[r][c]);
    }
    return m;
  }

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t r) const { return data_.at(r); }

  std::int64_t at(std::size_t r, std::size_t c) const {
    check(r, c);
    const Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it->second : 0;
  }

  void set(std::size_t r, std::size_t c, std::int64_t value) {
    check(r, c);
    Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
    const bool present = it != row.end() && it->first == c;
    if (value == 0) {
      if (present) row.erase(it);
    } else if (present) {
      it->second = value;
    } else {
      row.insert(it, {c, value});
    }
  }

  std::size_t nonzeros() const {
    std::size_t k = 0;
    for (const Row& row : data_) k += row.size();
    return k;
  }

  bool is_zero() const { return nonzeros() == 0; }

  std::vector<std::vector<std::int64_t>> to_dense() const {
    std::vector<std::vector<std::int64_t>> out(rows(), std::vector<std::int64_t>(cols_, 0));
    for (std::size_t r = 0; r < rows(); ++r)
      for (auto [c, v] : data_[r]) out[r][c] = v;
    return out;
  }

  /// Exact product; throws std::overflow_error if an entry leaves int64 range.
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    IntegerMatrix out(a.rows(), b.cols());
    std::vector<std::int64_t> acc(b.cols(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      std::fill(acc.begin(), acc.end(), 0);
      for (auto [k, av] : a.data_[r])
        for (auto [c, bv] : b.data_[k]) {
          std::int64_t term = 0;
          if (__builtin_mul_overflow(av, bv, &term) || __builtin_add_overflow(acc[c], term, &acc[c]))
            throw std::overflow_error("matrix product overflow");
        }
      for (std::size_t c = 0; c < acc.size(); ++c)
        if (acc[c] != 0) out.data_[r].emplace_back(c, acc[c]);
    }
    return out;
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows() || c >= cols_) throw std::out_of_range("matrix index out of range");
  }

  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

/// Upper bound on faces materialized by one complex.
inline constexpr std::size_t kMaxFaces = std::size_t{1} << 23;

/// Finite abstract simplicial complex with explicit faces per dimension.
///
/// Dimension -1 holds the empty face, which is always present. Faces are vertex bitmasks,
/// sorted ascending within each dimension.
class SimplicialComplex {
 public:
  /// The complex {∅} on `vertex_count` (unused) vertices.
  explicit SimplicialComplex(int vertex_count = 0) : vertex_count_(vertex_count), faces_{{Mask{0}}} {}

  /// Downward closure of `facets`.
  static SimplicialComplex from_facets(int vertex_count, const std::vector<std::vector<int>>& facets) {
    std::vector<Mask> closed;
    for (const auto& facet : facets) {
      Mask f = 0;
      for (int v : facet) {
        if (v < 0 || v >= vertex_count) throw std::out_of_range("facet vertex out of range");
        f |= bit(v);
      }
      // Every submask of f, including f and 0.
      Mask sub = f;
      while (true) {
        closed.push_back(sub);
        if (closed.size() > kMaxFaces * 4) throw std::length_error("complex too large");
        if (sub == 0) break;
        sub = (sub - 1) & f;
      }
    }
    std::sort(closed.begin(), closed.end());
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    return from_face_list(vertex_count, closed);
  }

  /// Builds from a downward-closed list of faces (not checked; see is_downward_closed).
  static SimplicialComplex from_face_list(int vertex_count, const std::vector<Mask>& faces) {
    SimplicialComplex k(vertex_count);
    k.faces_.clear();
    k.faces_.emplace_back(1, Mask{0});
    for (Mask f : faces) {
      if (f == 0) continue;
      const std::size_t idx = static_cast<std::size_t>(popcount(f));
      if (k.faces_.size() <= idx) k.faces_.resize(idx + 1);
      k.faces_[idx].push_back(f);
    }
    for (auto& layer : k.faces_) {
      std::sort(layer.begin(), layer.end());
      layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    }
    while (k.faces_.size() > 1 && k.faces_.back().empty()) k.faces_.pop_back();
    return k;
  }

  int vertex_count() const { return vertex_count_; }

  /// Largest face dimension; -1 for {∅}.
  int top_dimension() const { return static_cast<int>(faces_.size()) - 2; }

  /// Faces of dimension `dim` (>= -1); empty outside the stored range.
  const std::vector<Mask>& faces(int dim) const {
    static const std::vector<Mask> none;
    if (dim < -1 || dim > top_dimension()) return none;
    return faces_[static_cast<std::size_t>(dim + 1)];
  }

  std::size_t face_count() const {
    std::size_t k = 0;
    for (const auto& layer : faces_) k += layer.size();
    return k;
  }

  /// Position of `face` among faces of its dimension, or -1.
  std::ptrdiff_t index_of(Mask face) const {
    const auto& layer = faces(popcount(face) - 1);
    auto it = std::lower_bound(layer.begin(), layer.end(), face);
    return (it != layer.end() && *it == face) ? it - layer.begin() : -1;
  }

  bool contains(Mask face) const { return index_of(face) >= 0; }

  bool is_downward_closed() const {
    for (const auto& layer : faces_)
      for (Mask f : layer) {
        bool ok = true;
        for_each_bit(f, [&](int v) { ok = ok && contains(f & ~bit(v)); });
        if (!ok) return false;
      }
    return true;
  }

  /// Maximal faces in ascending (dimension, mask) order.
  std::vector<Mask> facets() const {
    std::vector<Mask> out;
    for (int d = -1; d <= top_dimension(); ++d) {
      const auto& above = faces(d + 1);
      for (Mask f : faces(d)) {
        bool maximal = true;
        for (Mask g : above)
          if ((g & f) == f) {
            maximal = false;
            break;
          }
        if (maximal) out.push_back(f);
      }
    }
    return out;
  }

 private:
  friend SimplicialComplex independence_complex(const Graph& g);

  int vertex_count_;
  std::vector<std::vector<Mask>> faces_;  // index d+1 holds the d-dimensional faces
};

/// I(G): faces are the independent sets of g (the empty set included).
inline SimplicialComplex independence_complex(const Graph& g) {
  SimplicialComplex k(g.n());
  const auto& rows = g.rows();
  std::size_t total = 1;
  // Depth-first extension by larger vertices keeps each set generated once.
  auto extend = [&](auto&& self, Mask face, Mask candidates, std::size_t size) -> void {
    while (candidates) {
      const int v = lowest(candidates);
      candidates &= candidates - 1;
      const Mask grown = face | bit(v);
      if (k.faces_.size() <= size + 1) k.faces_.resize(size + 2);
      k.faces_[size + 1].push_back(grown);
      if (++total > kMaxFaces) throw std::length_error("independence complex exceeds face limit");
      self(self, grown, candidates & ~rows[static_cast<std::size_t>(v)], size + 1);
    }
  };
  extend(extend, 0, g.vertices(), 0);
  for (auto& layer : k.faces_) std::sort(layer.begin(), layer.end());
  return k;
}

/// f_i for i = 0..top; the empty face is not listed.
inline std::vector<std::size_t> f_vector(const SimplicialComplex& k) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= k.top_dimension(); ++d) out.push_back(k.faces(d).size());
  return out;
}

/// Simplicial boundary ∂_i from i-faces (columns) to (i-1)-faces (rows); ∂_0 is the
/// augmentation onto the empty face. Sign of dropping the j-th smallest vertex is (-1)^j.
inline IntegerMatrix boundary_matrix(const SimplicialComplex& k, int i) {
  const auto& cols = k.faces(i);
  const auto& rows = k.faces(i - 1);
  IntegerMatrix m(rows.size(), cols.size());
  if (rows.empty() || cols.empty()) return m;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    int j = 0;
    for_each_bit(cols[c], [&](int v) {
      const std::ptrdiff_t r = k.index_of(cols[c] & ~bit(v));
      m.set(static_cast<std::size_t>(r), c, (j % 2 == 0) ? 1 : -1);
      ++j;
    });
  }
  return m;
}

/// Reduced Euler characteristic from face counts: Σ_{i>=0} (-1)^i f_i - 1.
inline std::int64_t face_euler(const SimplicialComplex& k) {
  std::int64_t chi = -1;
  for (int d = 0; d <= k.top_dimension(); ++d) {
    const auto f = static_cast<std::int64_t>(k.faces(d).size());
    chi += (d % 2 == 0) ? f : -f;
  }
  return chi;
}

}  // namespace indcx
