#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "indcx/complex.hpp"

namespace indcx {

using BigInt = boost::multiprecision::cpp_int;

/// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix; r is its rank.
struct SmithForm {
  std::vector<BigInt> invariant_factors;
  std::size_t rank = 0;

  /// Factors greater than 1, i.e. the torsion they induce in a cokernel.
  std::vector<BigInt> torsion() const {
    std::vector<BigInt> out;
    for (const BigInt& d : invariant_factors)
      if (d > 1) out.push_back(d);
    return out;
  }
};

namespace detail {

struct Int64Overflow {};

/// Arithmetic policy: int64 with overflow traps, or unbounded BigInt.
template <typename Int>
struct Exact;

template <>
struct Exact<std::int64_t> {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Int64Overflow{};
    return r;
  }
  static std::int64_t quot(std::int64_t a, std::int64_t b) {
    if (a == std::numeric_limits<std::int64_t>::min() && b == -1) throw Int64Overflow{};
    return a / b;
  }
  static std::int64_t abs(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) throw Int64Overflow{};
    return a < 0 ? -a : a;
  }
  static BigInt big(std::int64_t a) { return BigInt(a); }
};

template <>
struct Exact<BigInt> {
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
  static BigInt quot(const BigInt& a, const BigInt& b) { return a / b; }  // truncates toward zero
  static BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }
  static BigInt big(const BigInt& a) { return a; }
};

/// Sparse elimination to diagonal form by unimodular row and column operations.
///
/// Each pivot is a nonzero entry of least absolute value. Row operations clear the pivot's
/// column; column operations (which, once the column is clear, touch only the pivot row)
/// clear its row. A nonzero remainder is strictly smaller than the pivot and becomes the
/// next pivot, so each step terminates.
template <typename Int>
class SparseSmith {
  using X = Exact<Int>;
  using Entry = std::pair<std::size_t, Int>;
  using Row = std::vector<Entry>;

 public:
  explicit SparseSmith(const IntegerMatrix& m) : rows_(m.rows()), col_rows_(m.cols()), active_(m.rows(), true) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (const auto& [c, v] : m.row(r)) {
        rows_[r].emplace_back(c, Int(v));
        col_rows_[c].push_back(r);
      }
    }
  }

  std::vector<BigInt> diagonal() {
    std::vector<BigInt> diag;
    std::size_t r = 0, c = 0;
    while (find_pivot(r, c)) {
      settle(r, c);
      diag.push_back(X::big(X::abs(value(r, c))));
      active_[r] = false;
      rows_[r].clear();
    }
    return diag;
  }

 private:
  Int value(std::size_t r, std::size_t c) const {
    const Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it->second : Int(0);
  }

  // Least |entry| over active rows; ties go to the shorter row.
  bool find_pivot(std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    Int best = 0;
    std::size_t best_len = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!active_[r]) continue;
      for (const auto& [c, v] : rows_[r]) {
        Int a = X::abs(v);
        if (!found || a < best || (a == best && rows_[r].size() < best_len)) {
          found = true;
          best = a;
          best_len = rows_[r].size();
          pr = r;
          pc = c;
        }
      }
    }
    return found;
  }

  // rows_[dst] -= q * rows_[src], registering fill-in in the column index.
  void row_axpy(std::size_t dst, const Int& q, std::size_t src) {
    const Row& a = rows_[dst];
    const Row& b = rows_[src];
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        Int v = X::sub(Int(0), X::mul(q, b[j].second));
        col_rows_[b[j].first].push_back(dst);
        out.emplace_back(b[j].first, std::move(v));
        ++j;
      } else {
        Int v = X::sub(a[i].second, X::mul(q, b[j].second));
        if (v != 0) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    rows_[dst] = std::move(out);
  }

  // Repeats column and row clearing until (r, c) is the only nonzero in its row and column.
  void settle(std::size_t& r, std::size_t& c) {
    while (true) {
      const Int p = value(r, c);
      bool moved = false;

      std::vector<std::size_t> candidates = col_rows_[c];
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      std::vector<std::size_t> still;
      for (std::size_t i : candidates) {
        if (i == r || !active_[i]) continue;
        const Int a = value(i, c);
        if (a == 0) continue;
        const Int q = X::quot(a, p);
        if (q != 0) row_axpy(i, q, r);
        if (value(i, c) != 0) still.push_back(i);
      }
      col_rows_[c] = still;
      col_rows_[c].push_back(r);

      if (!still.empty()) {
        // A remainder in the pivot column: it is smaller than |p|.
        std::size_t best = still.front();
        for (std::size_t i : still)
          if (X::abs(value(i, c)) < X::abs(value(best, c))) best = i;
        r = best;
        moved = true;
      } else {
        // Column c is clear apart from the pivot, so col_j -= q * col_c only changes (r, j).
        Row& row = rows_[r];
        Row kept;
        std::size_t best_col = c;
        Int best_abs = X::abs(p);
        for (auto& [j, a] : row) {
          if (j == c) {
            kept.emplace_back(j, a);
            continue;
          }
          Int rem = X::sub(a, X::mul(X::quot(a, p), p));
          if (rem == 0) continue;
          if (X::abs(rem) < best_abs) {
            best_abs = X::abs(rem);
            best_col = j;
          }
          kept.emplace_back(j, std::move(rem));
        }
        row = std::move(kept);
        if (best_col != c) {
          c = best_col;
          moved = true;
        }
      }
      if (!moved) return;
    }
  }

  std::vector<Row> rows_;
  std::vector<std::vector<std::size_t>> col_rows_;
  std::vector<bool> active_;
};

/// Rearranges diagonal entries into a divisibility chain with the same product structure.
inline std::vector<BigInt> divisibility_chain(std::vector<BigInt> diag) {
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] == 0) continue;
      BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
      BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  std::sort(diag.begin(), diag.end());
  return diag;
}

}  // namespace detail

/// Exact Smith normal form. Runs in int64 and restarts with unbounded integers if any
/// intermediate value overflows.
inline SmithForm smith_normal_form(const IntegerMatrix& m) {
  std::vector<BigInt> diag;
  try {
    diag = detail::SparseSmith<std::int64_t>(m).diagonal();
  } catch (const detail::Int64Overflow&) {
    diag = detail::SparseSmith<BigInt>(m).diagonal();
  }
  SmithForm out;
  out.rank = diag.size();
  out.invariant_factors = detail::divisibility_chain(std::move(diag));
  return out;
}

}  // namespace indcx
