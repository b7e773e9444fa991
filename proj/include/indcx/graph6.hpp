#pragma once

#include <cstddef>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "indcx/graph.hpp"

namespace indcx {

/// Input error carrying the byte offset (graph6) or line number (edge lists) where it was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Largest order representable in graph6 short form.
inline constexpr int kGraph6MaxShort = 62;

namespace detail {

inline std::size_t graph6_data_bytes(int n) {
  std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
  return (bits + 5) / 6;
}

}  // namespace detail

/// Parses one graph6 line in short form (n <= 62). The text must not contain a trailing newline.
inline Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  const auto header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw ParseError("graph6: long form (n > 62) is not supported", 0);
  if (header < 63 || header > 63 + kGraph6MaxShort) throw ParseError("graph6: malformed header byte", 0);

  const int n = header - 63;
  const std::size_t need = detail::graph6_data_bytes(n);
  if (text.size() < 1 + need) throw ParseError("graph6: truncated edge data", text.size());
  if (text.size() > 1 + need) throw ParseError("graph6: trailing garbage", 1 + need);

  Graph g(n);
  std::size_t bit_index = 0;
  const std::size_t total_bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  for (std::size_t k = 0; k < need; ++k) {
    const auto byte = static_cast<unsigned char>(text[1 + k]);
    if (byte < 63 || byte > 126) throw ParseError("graph6: byte outside [63, 126]", 1 + k);
    const int group = byte - 63;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      const bool set = (group >> b) & 1;
      if (bit_index >= total_bits) {
        if (set) throw ParseError("graph6: nonzero padding bit", 1 + k);
        continue;
      }
      if (!set) continue;
      // Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
      int j = 1;
      std::size_t start = 0;
      while (start + static_cast<std::size_t>(j) <= bit_index) {
        start += static_cast<std::size_t>(j);
        ++j;
      }
      const int i = static_cast<int>(bit_index - start);
      g.add_edge(i, j);
    }
  }
  return g;
}

inline std::string encode_graph6(const Graph& g) {
  const int n = g.n();
  if (n > kGraph6MaxShort)
    throw std::invalid_argument("graph6: n = " + std::to_string(n) + " exceeds short-form limit 62");
  std::string out;
  out.reserve(1 + detail::graph6_data_bytes(n));
  out.push_back(static_cast<char>(63 + n));
  int group = 0;
  int filled = 0;
  const auto& rows = g.rows();
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | static_cast<int>((rows[static_cast<std::size_t>(i)] >> j) & 1);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

/// Plain edge-list text: first line "n m", then m lines "u v" (0-indexed).
/// Errors report the 1-based line number as the offset.
inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("edge list: missing header line", 1);
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) throw ParseError("edge list: header must be 'n m'", line_no);
  }
  if (n < 0 || n > kMaxVertices) throw ParseError("edge list: n must be in [0, 64]", line_no);
  if (m < 0 || m > n * (n - 1) / 2) throw ParseError("edge list: impossible edge count", line_no);

  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    if (!next_line()) throw ParseError("edge list: expected " + std::to_string(m) + " edges", line_no + 1);
    std::istringstream es(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) throw ParseError("edge list: edge line must be 'u v'", line_no);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: vertex out of range", line_no);
    if (u == v) throw ParseError("edge list: self-loop", line_no);
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v))) throw ParseError("edge list: duplicate edge", line_no);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line()) throw ParseError("edge list: trailing content", line_no);
  return g;
}

inline std::string encode_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace indcx
