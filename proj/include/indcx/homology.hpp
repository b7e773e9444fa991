#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "indcx/complex.hpp"
#include "indcx/smith.hpp"

namespace indcx {

/// One reduced homology group Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k.
struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  ///< each >= 2, in divisibility order

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Reduced integral homology by dimension, starting at -1. Dimensions not present are trivial.
class HomologyGroups {
 public:
  HomologyGroups() = default;
  explicit HomologyGroups(std::map<int, HomologyGroup> groups) : groups_(std::move(groups)) {}

  const HomologyGroup& operator[](int dim) const {
    static const HomologyGroup trivial_group;
    auto it = groups_.find(dim);
    return it == groups_.end() ? trivial_group : it->second;
  }

  const std::map<int, HomologyGroup>& groups() const { return groups_; }

  bool has_torsion() const {
    for (const auto& [d, g] : groups_)
      if (!g.torsion.empty()) return true;
    return false;
  }

  bool all_trivial() const {
    for (const auto& [d, g] : groups_)
      if (!g.trivial()) return false;
    return true;
  }

 private:
  std::map<int, HomologyGroup> groups_;
};

/// H̃_i for i = -1..top: free rank null(∂_i) - rank(∂_{i+1}); torsion from the invariant
/// factors of ∂_{i+1} above 1.
inline HomologyGroups reduced_homology(const SimplicialComplex& k) {
  const int top = k.top_dimension();
  // Smith forms of ∂_0 .. ∂_{top}; ∂_{top+1} is zero.
  std::vector<SmithForm> snf;
  for (int i = 0; i <= top; ++i) snf.push_back(smith_normal_form(boundary_matrix(k, i)));
  auto rank_of = [&](int i) -> std::size_t { return (i >= 0 && i <= top) ? snf[static_cast<std::size_t>(i)].rank : 0; };

  std::map<int, HomologyGroup> groups;
  for (int i = -1; i <= top; ++i) {
    HomologyGroup g;
    const std::size_t chains = k.faces(i).size();
    g.free_rank = chains - rank_of(i) - rank_of(i + 1);
    if (i + 1 <= top) g.torsion = snf[static_cast<std::size_t>(i + 1)].torsion();
    groups.emplace(i, std::move(g));
  }
  return HomologyGroups(std::move(groups));
}

/// β̃_i for i = 0..top (dimension -1 excluded).
inline std::vector<std::size_t> betti(const HomologyGroups& h) {
  std::vector<std::size_t> out;
  int top = -1;
  for (const auto& [d, g] : h.groups()) top = std::max(top, d);
  for (int i = 0; i <= top; ++i) out.push_back(h[i].free_rank);
  return out;
}

inline std::vector<std::size_t> betti(const SimplicialComplex& k) { return betti(reduced_homology(k)); }

/// β = Σ_{i>=0} β̃_i.
inline std::size_t total_betti(const HomologyGroups& h) {
  std::size_t sum = 0;
  for (std::size_t b : betti(h)) sum += b;
  return sum;
}

inline std::size_t total_betti(const SimplicialComplex& k) { return total_betti(reduced_homology(k)); }

/// χ̃ = Σ_{i>=0} (-1)^i β̃_i.
inline std::int64_t euler_from_betti(const HomologyGroups& h) {
  std::int64_t chi = 0;
  const auto b = betti(h);
  for (std::size_t i = 0; i < b.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(b[i]);
  return chi;
}

inline std::int64_t euler_from_betti(const SimplicialComplex& k) { return euler_from_betti(reduced_homology(k)); }

/// Homology-level shadow of a homotopy type: a point, a single sphere, or anything else.
struct HomologyType {
  enum class Kind { PointLike, SphereLike, Other };
  Kind kind = Kind::Other;
  int dim = 0;  ///< meaningful for SphereLike only

  static HomologyType point() { return {Kind::PointLike, 0}; }
  static HomologyType sphere(int d) { return {Kind::SphereLike, d}; }
  static HomologyType other() { return {Kind::Other, 0}; }

  std::string to_string() const {
    switch (kind) {
      case Kind::PointLike: return "point";
      case Kind::SphereLike: return "S^" + std::to_string(dim);
      case Kind::Other: break;
    }
    return "other";
  }

  friend bool operator==(const HomologyType&, const HomologyType&) = default;
};

inline HomologyType homology_class(const HomologyGroups& h) {
  if (h.has_torsion()) return HomologyType::other();
  int sphere_dim = 0;
  int nontrivial = 0;
  for (const auto& [d, g] : h.groups()) {
    if (g.free_rank == 0) continue;
    if (g.free_rank > 1) return HomologyType::other();
    sphere_dim = d;
    ++nontrivial;
  }
  if (nontrivial == 0) return HomologyType::point();
  if (nontrivial == 1) return HomologyType::sphere(sphere_dim);
  return HomologyType::other();
}

inline HomologyType homology_class(const SimplicialComplex& k) { return homology_class(reduced_homology(k)); }

}  // namespace indcx
