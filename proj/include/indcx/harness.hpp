#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "indcx/classifier.hpp"
#include "indcx/complex.hpp"
#include "indcx/cycles.hpp"
#include "indcx/enumerate.hpp"
#include "indcx/graph.hpp"
#include "indcx/graph6.hpp"
#include "indcx/homology.hpp"

namespace indcx {

enum class Check { Main, Converse, KalaiMeshulam, EulerBound, MvSubadditivity };

inline constexpr Check kAllChecks[] = {Check::Main, Check::Converse, Check::KalaiMeshulam, Check::EulerBound,
                                       Check::MvSubadditivity};

inline std::string check_name(Check c) {
  switch (c) {
    case Check::Main: return "main";
    case Check::Converse: return "converse";
    case Check::KalaiMeshulam: return "kalai_meshulam";
    case Check::EulerBound: return "euler_bound";
    case Check::MvSubadditivity: return "mv_subadditivity";
  }
  return "?";
}

inline std::optional<Check> parse_check(const std::string& name) {
  for (Check c : kAllChecks)
    if (check_name(c) == name) return c;
  return std::nullopt;
}

struct CheckResult {
  bool passed = true;
  std::string detail;
  std::optional<std::vector<int>> witness;  ///< vertices of the offending induced subgraph, if any

  static CheckResult pass(std::string detail = {}) { return {true, std::move(detail), std::nullopt}; }
  static CheckResult fail(std::string detail, std::optional<std::vector<int>> witness = std::nullopt) {
    return {false, std::move(detail), std::move(witness)};
  }
};

struct HarnessOptions {
  std::uint64_t seed = 0;
  /// Induced-subgraph quantifiers are exhaustive up to this host order, sampled above it.
  int exhaustive_order = 8;
  int sampled_subsets = 1000;
};

namespace detail {

inline std::vector<int> mask_vertices(Mask m) { return VertexSet(m).to_vector(); }

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Vertex subsets to quantify over: all of them for small hosts, otherwise the full set plus
/// `opts.sampled_subsets` uniform draws seeded from the graph's encoding.
inline std::vector<Mask> induced_subsets(const Graph& g, const HarnessOptions& opts, std::optional<Mask> must = {}) {
  std::vector<Mask> out;
  if (g.n() <= opts.exhaustive_order) {
    for (Mask m = 0; m <= g.vertices(); ++m) out.push_back(m);
    return out;
  }
  std::mt19937_64 rng(opts.seed ^ fnv1a(encode_graph6(g)));
  out.push_back(g.vertices());
  if (must) out.push_back(*must);
  for (int s = 0; s < opts.sampled_subsets; ++s) out.push_back(rng() & g.vertices());
  return out;
}

inline std::size_t rank_at(const HomologyGroups& h, int dim) { return h[dim].free_rank; }

}  // namespace detail

/// Ternary graphs: I(G) has the homology of a point or one sphere, and the recursion
/// classifier agrees with it. Non-ternary graphs pass vacuously.
inline CheckResult check_main_theorem(const Graph& g, Classifier& classifier) {
  if (!is_ternary(g).ternary) return CheckResult::pass("vacuous: not ternary");
  const HomologyType hc = homology_class(independence_complex(g));
  if (hc.kind == HomologyType::Kind::Other) return CheckResult::fail("homology is neither a point nor a sphere");
  HomotopyClass computed;
  try {
    computed = classifier.classify(g);
  } catch (const NonTernaryDetected& e) {
    return CheckResult::fail(std::string("classifier rejected a ternary graph: ") + e.what(), e.x);
  }
  const bool agree = (hc.kind == HomologyType::Kind::PointLike && computed.contractible) ||
                     (hc.kind == HomologyType::Kind::SphereLike && !computed.contractible && computed.dim == hc.dim);
  if (!agree) return CheckResult::fail("homology " + hc.to_string() + " vs classifier " + computed.to_string());
  return CheckResult::pass(computed.to_string());
}

inline CheckResult check_main_theorem(const Graph& g) {
  Classifier classifier;
  return check_main_theorem(g, classifier);
}

/// Non-ternary graphs: the witnessing induced cycle C_{3k+3} has β̃_k = 2 and homology other
/// than a point or a sphere. Throws std::invalid_argument on ternary input.
inline CheckResult check_converse(const Graph& g) {
  const auto t = is_ternary(g);
  if (t.ternary) throw std::invalid_argument("check_converse: graph is ternary");
  const auto& w = *t.witness;
  const auto cycle = induced_subgraph(g, w.mask());
  const int k = w.length() / 3 - 1;
  const HomologyGroups h = reduced_homology(independence_complex(cycle.graph));
  const std::size_t bk = h[k].free_rank;
  const bool ok = bk == 2 && homology_class(h).kind == HomologyType::Kind::Other && total_betti(h) == 2 &&
                  !h.has_torsion();
  if (!ok)
    return CheckResult::fail("induced C_" + std::to_string(w.length()) + " has beta_" + std::to_string(k) + " = " +
                                 std::to_string(bk),
                             w.vertices);
  return CheckResult::pass("C_" + std::to_string(w.length()) + ": beta_" + std::to_string(k) + " = 2");
}

/// Ternary graphs: every induced subgraph has total Betti number at most 1.
inline CheckResult check_kalai_meshulam(const Graph& g, const HarnessOptions& opts = {}) {
  if (!is_ternary(g).ternary) return CheckResult::pass("vacuous: not ternary");
  for (Mask s : detail::induced_subsets(g, opts)) {
    const auto h = induced_subgraph(g, s);
    const std::size_t beta = total_betti(independence_complex(h.graph));
    if (beta > 1) return CheckResult::fail("induced subgraph with total Betti " + std::to_string(beta), detail::mask_vertices(s));
  }
  return CheckResult::pass();
}

/// ternary ⇔ |χ̃(I(H))| <= 1 for every induced subgraph H.
inline CheckResult check_euler_bound(const Graph& g, const HarnessOptions& opts = {}) {
  const auto t = is_ternary(g);
  std::optional<Mask> must;
  if (!t.ternary) must = t.witness->mask();
  std::optional<Mask> large;
  for (Mask s : detail::induced_subsets(g, opts, must)) {
    const std::int64_t chi = face_euler(independence_complex(induced_subgraph(g, s).graph));
    if (chi > 1 || chi < -1) {
      large = s;
      break;
    }
  }
  if (t.ternary && large)
    return CheckResult::fail("ternary graph with an induced |chi| > 1", detail::mask_vertices(*large));
  if (!t.ternary && !large)
    return CheckResult::fail("non-ternary graph with every induced |chi| <= 1", t.witness->vertices);
  return CheckResult::pass(t.ternary ? "all induced |chi| <= 1" : "witness with |chi| >= 2");
}

/// β̃_i(I(G)) <= β̃_i(I(G-v)) + β̃_{i-1}(I(G-N[v])) for every vertex v and every i >= -1.
inline CheckResult check_mv_subadditivity(const Graph& g) {
  const HomologyGroups whole = reduced_homology(independence_complex(g));
  const int top = g.n();
  for (int v = 0; v < g.n(); ++v) {
    const auto minus_v = residual(g, VertexSet{}, VertexSet{v});
    const auto minus_nv = residual(g, VertexSet{v}, VertexSet{});
    const HomologyGroups hv = reduced_homology(independence_complex(minus_v.graph));
    const HomologyGroups hn = reduced_homology(independence_complex(minus_nv.graph));
    for (int i = -1; i <= top; ++i) {
      const std::size_t lhs = detail::rank_at(whole, i);
      const std::size_t rhs = detail::rank_at(hv, i) + detail::rank_at(hn, i - 1);
      if (lhs > rhs)
        return CheckResult::fail("vertex " + std::to_string(v) + ", dimension " + std::to_string(i) + ": " +
                                     std::to_string(lhs) + " > " + std::to_string(rhs),
                                 std::vector<int>{v});
    }
  }
  return CheckResult::pass();
}

/// Per-graph verification record.
struct VerificationReport {
  std::string g6;
  int n = 0;
  bool ternary = false;
  std::optional<HomotopyClass> homotopy;  ///< absent for non-ternary graphs
  std::vector<std::size_t> betti;
  bool torsion = false;
  std::int64_t chi = 0;
  std::vector<std::pair<Check, CheckResult>> checks;
  std::optional<CycleWitness> cycle;  ///< for non-ternary graphs
  std::string error;                  ///< set when the summary itself could not be computed

  bool passed() const {
    if (!error.empty()) return false;
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second.passed; });
  }
};

inline VerificationReport verify_graph(const Graph& g, const std::vector<Check>& checks, Classifier& classifier,
                                       const HarnessOptions& opts = {}) {
  VerificationReport r;
  r.g6 = g.n() <= kGraph6MaxShort ? encode_graph6(g) : std::string();
  r.n = g.n();
  try {
    const auto t = is_ternary(g);
    r.ternary = t.ternary;
    r.cycle = t.witness;
    const HomologyGroups h = reduced_homology(independence_complex(g));
    r.betti = betti(h);
    r.torsion = h.has_torsion();
    r.chi = euler_from_betti(h);
    if (r.ternary) r.homotopy = classifier.classify(g);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  for (Check c : checks) {
    CheckResult res;
    try {
      switch (c) {
        case Check::Main: res = check_main_theorem(g, classifier); break;
        case Check::Converse:
          res = r.ternary ? CheckResult::pass("vacuous: ternary") : check_converse(g);
          break;
        case Check::KalaiMeshulam: res = check_kalai_meshulam(g, opts); break;
        case Check::EulerBound: res = check_euler_bound(g, opts); break;
        case Check::MvSubadditivity: res = check_mv_subadditivity(g); break;
      }
    } catch (const std::exception& e) {
      res = CheckResult::fail(std::string("error: ") + e.what());
    }
    r.checks.emplace_back(c, std::move(res));
  }
  return r;
}

struct ParseFailure {
  std::size_t line = 0;
  std::string message;
};

/// Aggregate over a campaign; `reports` is in input order.
struct AggregateReport {
  std::size_t graphs = 0;
  std::size_t ternary = 0;
  std::size_t failures = 0;  ///< graphs with at least one failed check
  std::map<std::string, std::size_t> check_failures;
  std::vector<ParseFailure> parse_errors;
  std::vector<VerificationReport> reports;

  void add(VerificationReport r) {
    ++graphs;
    if (r.ternary) ++ternary;
    if (!r.passed()) ++failures;
    for (const auto& [c, res] : r.checks) {
      auto& slot = check_failures[check_name(c)];
      if (!res.passed) ++slot;
    }
    reports.push_back(std::move(r));
  }
};

/// Verifies graphs with `jobs` worker threads sharing one classifier; results keep input order.
inline std::vector<VerificationReport> verify_all(const std::vector<Graph>& graphs, const std::vector<Check>& checks,
                                                  const HarnessOptions& opts, int jobs, Classifier& classifier) {
  std::vector<VerificationReport> out(graphs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) out[i] = verify_graph(graphs[i], checks, classifier, opts);
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
  if (workers == 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return out;
}

/// All non-isomorphic graphs with 1 <= n <= n_max.
inline AggregateReport verify_exhaustive(int n_max, const std::vector<Check>& checks, const HarnessOptions& opts = {},
                                         int jobs = 1) {
  if (n_max > kMaxDedupOrder) throw std::invalid_argument("verify_exhaustive supports n_max <= 8");
  std::vector<Graph> graphs;
  for (int n = 1; n <= n_max; ++n) {
    auto level = nonisomorphic_graphs(n);
    graphs.insert(graphs.end(), level.begin(), level.end());
  }
  Classifier classifier;
  AggregateReport agg;
  for (auto& r : verify_all(graphs, checks, opts, jobs, classifier)) agg.add(std::move(r));
  return agg;
}

/// One graph6 line per graph; blank lines are ignored, malformed lines recorded and skipped.
inline AggregateReport verify_stream(std::istream& in, const std::vector<Check>& checks,
                                     const HarnessOptions& opts = {}, int jobs = 1) {
  AggregateReport agg;
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      agg.parse_errors.push_back({line_no, e.what()});
    }
  }
  if (in.bad()) throw std::runtime_error("I/O error while reading graph stream");
  Classifier classifier;
  for (auto& r : verify_all(graphs, checks, opts, jobs, classifier)) agg.add(std::move(r));
  return agg;
}

}  // namespace indcx
