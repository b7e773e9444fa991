#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "indcx/graph.hpp"

namespace indcx {

/// A chordless (induced) cycle, listed in cyclic order starting at its least vertex.
struct CycleWitness {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }

  Mask mask() const {
    Mask m = 0;
    for (int v : vertices) m |= bit(v);
    return m;
  }

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Returns true to stop the enumeration after the current witness.
using CycleStop = std::function<bool(const CycleWitness&)>;

namespace detail {

class ChordlessCycleSearch {
 public:
  ChordlessCycleSearch(const Graph& g, const CycleStop& stop, std::vector<CycleWitness>& out)
      : rows_(g.rows()), stop_(stop), out_(out) {}

  void run(int n) {
    for (int s = 0; s < n && !done_; ++s) {
      anchor_ = s;
      above_ = ~low_bits(s + 1);
      Mask firsts = rows_[static_cast<std::size_t>(s)] & above_;
      for_each_bit(firsts, [&](int a) {
        if (done_) return;
        second_ = a;
        path_ = {s, a};
        extend(a, bit(s) | bit(a), 0);
      });
    }
  }

 private:
  // `blocked` is N[p] over interior path vertices (every path vertex except the anchor and the end).
  void extend(int end, Mask on_path, Mask blocked) {
    const Mask anchor_nbrs = rows_[static_cast<std::size_t>(anchor_)];
    Mask next = rows_[static_cast<std::size_t>(end)] & above_ & ~on_path & ~blocked;
    while (next && !done_) {
      const int x = lowest(next);
      next &= next - 1;
      if ((anchor_nbrs >> x) & 1) {
        // x closes the cycle; x > second vertex fixes the traversal direction.
        if (x > second_) {
          path_.push_back(x);
          emit();
          path_.pop_back();
        }
        continue;
      }
      const Mask grown = blocked | rows_[static_cast<std::size_t>(end)] | bit(end);
      path_.push_back(x);
      extend(x, on_path | bit(x), grown);
      path_.pop_back();
    }
  }

  void emit() {
    CycleWitness w{path_};
    if (stop_ && stop_(w)) done_ = true;
    out_.push_back(std::move(w));
  }

  const std::vector<Mask>& rows_;
  const CycleStop& stop_;
  std::vector<CycleWitness>& out_;
  std::vector<int> path_;
  Mask above_ = 0;
  int anchor_ = 0;
  int second_ = 0;
  bool done_ = false;
};

}  // namespace detail

/// Every chordless cycle of length >= 3, each exactly once up to rotation and reflection.
///
/// Paths are grown from the cycle's least vertex (the anchor) through strictly larger
/// vertices, keeping the path induced; a path closes when its end meets a neighbor of the
/// anchor. Enumeration halts after the first witness for which `stop` returns true.
inline std::vector<CycleWitness> enumerate_chordless_cycles(const Graph& g, const CycleStop& stop = {}) {
  std::vector<CycleWitness> out;
  detail::ChordlessCycleSearch search(g, stop, out);
  search.run(g.n());
  return out;
}

struct TernaryResult {
  bool ternary = true;
  std::optional<CycleWitness> witness;  ///< an induced cycle whose length is divisible by 3
};

/// A graph is ternary when it has no induced cycle of length divisible by 3.
inline TernaryResult is_ternary(const Graph& g) {
  auto found = enumerate_chordless_cycles(g, [](const CycleWitness& w) { return w.length() % 3 == 0; });
  if (!found.empty() && found.back().length() % 3 == 0) return {false, found.back()};
  return {true, std::nullopt};
}

}  // namespace indcx
