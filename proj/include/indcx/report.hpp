#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"

#include "indcx/complex.hpp"
#include "indcx/harness.hpp"
#include "indcx/homology.hpp"

namespace indcx {

using Json = nlohmann::ordered_json;

/// Integers that fit in int64 stay numbers; anything larger becomes a decimal string.
inline Json bigint_json(const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<std::int64_t>::max()) && v >= BigInt(std::numeric_limits<std::int64_t>::min()))
    return static_cast<std::int64_t>(v);
  return v.str();
}

/// Debug dump: dimension -> list of faces, each a sorted vertex list.
inline Json complex_to_json(const SimplicialComplex& k) {
  Json out = Json::object();
  for (int d = -1; d <= k.top_dimension(); ++d) {
    Json layer = Json::array();
    for (Mask f : k.faces(d)) layer.push_back(VertexSet(f).to_vector());
    out[std::to_string(d)] = std::move(layer);
  }
  return out;
}

inline Json homology_to_json(const HomologyGroups& h) {
  Json groups = Json::array();
  for (const auto& [d, g] : h.groups()) {
    Json t = Json::array();
    for (const auto& x : g.torsion) t.push_back(bigint_json(x));
    groups.push_back({{"dim", d}, {"rank", g.free_rank}, {"torsion", std::move(t)}});
  }
  return groups;
}

/// One JSON-lines record: {"g6","n","ternary","class","betti","torsion","chi","checks","witness"}.
inline Json report_to_json(const VerificationReport& r) {
  Json j;
  j["g6"] = r.g6;
  j["n"] = r.n;
  j["ternary"] = r.ternary;
  j["class"] = r.homotopy ? r.homotopy->to_string() : "n/a";
  j["betti"] = r.betti;
  j["torsion"] = r.torsion;
  j["chi"] = r.chi;
  Json checks = Json::object();
  const std::pair<Check, CheckResult>* failing = nullptr;
  for (const auto& entry : r.checks) {
    checks[check_name(entry.first)] = entry.second.passed ? "pass" : "fail";
    if (!entry.second.passed && !failing) failing = &entry;
  }
  j["checks"] = std::move(checks);
  if (failing) {
    j["witness"] = {{"kind", "subgraph"},
                    {"check", check_name(failing->first)},
                    {"detail", failing->second.detail},
                    {"vertices", failing->second.witness.value_or(std::vector<int>{})}};
  } else if (r.cycle) {
    j["witness"] = {{"kind", "cycle"}, {"vertices", r.cycle->vertices}};
  } else {
    j["witness"] = nullptr;
  }
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

inline Json summary_to_json(const AggregateReport& agg) {
  Json s;
  s["graphs"] = agg.graphs;
  s["ternary"] = agg.ternary;
  s["failures"] = agg.failures;
  Json per = Json::object();
  for (const auto& [name, count] : agg.check_failures) per[name] = count;
  s["check_failures"] = std::move(per);
  Json errors = Json::array();
  for (const auto& e : agg.parse_errors) errors.push_back({{"line", e.line}, {"message", e.message}});
  s["parse_errors"] = std::move(errors);
  return Json{{"summary", std::move(s)}};
}

inline std::string csv_header(const std::vector<Check>& checks) {
  std::string h = "g6,n,ternary,class,betti,chi";
  for (Check c : checks) h += "," + check_name(c);
  return h;
}

inline std::string report_to_csv(const VerificationReport& r) {
  std::ostringstream os;
  // graph6 bytes never include ',' or '"', so no quoting is needed.
  os << r.g6 << ',' << r.n << ',' << (r.ternary ? "true" : "false") << ','
     << (r.homotopy ? r.homotopy->to_string() : "n/a") << ',';
  for (std::size_t i = 0; i < r.betti.size(); ++i) os << (i ? " " : "") << r.betti[i];
  os << ',' << r.chi;
  for (const auto& [c, res] : r.checks) os << ',' << (res.passed ? "pass" : "fail");
  return os.str();
}

}  // namespace indcx
