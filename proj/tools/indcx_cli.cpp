// indcx: command-line front end for the independence-complex library.
//
//   indcx homology <g6|file> [--complex]
//   indcx classify <g6|file>
//   indcx ternary <g6|file>
//   indcx oracle-cycles --max L
//   indcx verify --max-n N [--checks list] [--jobs K] [--summary-only]
//   indcx verify --stdin [--checks list] [--jobs K] [--summary-only]
//
// Global flags: --format json|csv, --seed S. Exit status: 0 when every check passes,
// 1 on a check failure, 2 on a usage, parse or input error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "indcx/indcx.hpp"
#include "indcx/report.hpp"

namespace {

using namespace indcx;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

enum class Format { Json, Csv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string graph_id(const Graph& g) { return g.n() <= kGraph6MaxShort ? encode_graph6(g) : std::string(); }

bool looks_like_edge_list_header(const std::string& line) {
  std::istringstream is(line);
  long long n = 0, m = 0;
  std::string extra;
  return static_cast<bool>(is >> n >> m) && !(is >> extra);
}

/// A path to an existing file is read as an edge list (first line "n m") or as graph6
/// lines; anything else is parsed as a single graph6 string.
std::vector<Graph> load_graphs(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return {parse_graph6(arg)};
  std::ifstream in(arg);
  if (!in) throw UsageError("cannot open " + arg);
  std::string first;
  while (std::getline(in, first) && first.find_first_not_of(" \t\r") == std::string::npos) {
  }
  in.clear();
  in.seekg(0);
  if (looks_like_edge_list_header(first)) return {parse_edge_list(in)};

  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(arg + ":" + std::to_string(line_no) + ": " + e.what(), e.offset());
    }
  }
  if (out.empty()) throw UsageError(arg + ": no graphs found");
  return out;
}

std::string join(const std::vector<std::size_t>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

int run_homology(const std::string& input, bool with_complex, Format format) {
  if (format == Format::Csv) std::cout << "g6,n,class,betti,torsion,chi\n";
  for (const Graph& g : load_graphs(input)) {
    const auto k = independence_complex(g);
    const auto h = reduced_homology(k);
    if (format == Format::Csv) {
      std::string torsion;
      for (const auto& [d, grp] : h.groups())
        for (const auto& t : grp.torsion) torsion += (torsion.empty() ? "" : " ") + std::to_string(d) + ":" + t.str();
      std::cout << graph_id(g) << ',' << g.n() << ',' << homology_class(h).to_string() << ',' << join(betti(h), " ")
                << ',' << torsion << ',' << euler_from_betti(h) << '\n';
      continue;
    }
    Json j;
    j["g6"] = graph_id(g);
    j["n"] = g.n();
    j["class"] = homology_class(h).to_string();
    j["betti"] = betti(h);
    j["chi"] = euler_from_betti(h);
    j["f_vector"] = f_vector(k);
    j["homology"] = homology_to_json(h);
    if (with_complex) j["complex"] = complex_to_json(k);
    std::cout << j.dump() << '\n';
  }
  return kExitOk;
}

int run_classify(const std::string& input, Format format) {
  if (format == Format::Csv) std::cout << "g6,n,ternary,class\n";
  Classifier classifier;
  for (const Graph& g : load_graphs(input)) {
    const auto t = is_ternary(g);
    const std::string cls = t.ternary ? classifier.classify(g).to_string() : "n/a";
    if (format == Format::Csv) {
      std::cout << graph_id(g) << ',' << g.n() << ',' << (t.ternary ? "true" : "false") << ',' << cls << '\n';
      continue;
    }
    Json j;
    j["g6"] = graph_id(g);
    j["n"] = g.n();
    j["ternary"] = t.ternary;
    j["class"] = cls;
    std::cout << j.dump() << '\n';
  }
  return kExitOk;
}

int run_ternary(const std::string& input, Format format) {
  if (format == Format::Csv) std::cout << "g6,n,ternary,witness\n";
  for (const Graph& g : load_graphs(input)) {
    const auto t = is_ternary(g);
    if (format == Format::Csv) {
      std::string w;
      if (t.witness)
        for (std::size_t i = 0; i < t.witness->vertices.size(); ++i)
          w += (i ? " " : "") + std::to_string(t.witness->vertices[i]);
      std::cout << graph_id(g) << ',' << g.n() << ',' << (t.ternary ? "true" : "false") << ',' << w << '\n';
      continue;
    }
    Json j;
    j["g6"] = graph_id(g);
    j["n"] = g.n();
    j["ternary"] = t.ternary;
    j["witness"] = t.witness ? Json(t.witness->vertices) : Json(nullptr);
    std::cout << j.dump() << '\n';
  }
  return kExitOk;
}

/// I(C_l) for l = 3..max: homology engine against the closed formula, plus the classifier
/// where the formula predicts a single sphere.
int run_oracle_cycles(int max_length, Format format) {
  if (max_length < 3) throw UsageError("--max must be at least 3");
  if (format == Format::Csv) std::cout << "length,formula,betti,class,agree\n";
  bool all_agree = true;
  for (int len = 3; len <= max_length; ++len) {
    const auto expected = kozlov_oracle(len);
    const auto h = reduced_homology(independence_complex(cycle_graph(len)));
    bool agree = !h.has_torsion();
    for (const auto& [d, grp] : h.groups())
      agree = agree && grp.free_rank == (d == expected.dim ? (expected.wedge ? 2u : 1u) : 0u);
    std::string cls = "n/a";
    if (!expected.wedge) {
      cls = classify(cycle_graph(len)).to_string();
      agree = agree && cls == HomotopyClass::Sphere(expected.dim).to_string();
    }
    all_agree = all_agree && agree;
    if (format == Format::Csv) {
      std::cout << len << ',' << expected.to_string() << ',' << join(betti(h), " ") << ',' << cls << ','
                << (agree ? "true" : "false") << '\n';
      continue;
    }
    Json j;
    j["length"] = len;
    j["formula"] = expected.to_string();
    j["betti"] = betti(h);
    j["class"] = cls;
    j["agree"] = agree;
    std::cout << j.dump() << '\n';
  }
  return all_agree ? kExitOk : kExitCheckFailure;
}

std::vector<Check> parse_check_list(const std::string& list) {
  if (list.empty() || list == "all") return {std::begin(kAllChecks), std::end(kAllChecks)};
  std::vector<Check> out;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    auto c = parse_check(name);
    if (!c) throw UsageError("unknown check '" + name + "'");
    if (std::find(out.begin(), out.end(), *c) == out.end()) out.push_back(*c);
  }
  if (out.empty()) throw UsageError("empty --checks list");
  return out;
}

struct VerifyArgs {
  int max_n = 0;
  bool from_stdin = false;
  std::string checks;
  int jobs = 1;
  bool summary_only = false;
};

int run_verify(const VerifyArgs& args, Format format, std::uint64_t seed) {
  if (args.from_stdin == (args.max_n > 0)) throw UsageError("verify needs exactly one of --max-n N or --stdin");
  if (args.max_n > kMaxDedupOrder) throw UsageError("--max-n must be at most " + std::to_string(kMaxDedupOrder));
  if (args.jobs < 1) throw UsageError("--jobs must be positive");
  const auto checks = parse_check_list(args.checks);
  HarnessOptions opts;
  opts.seed = seed;

  const AggregateReport agg = args.from_stdin ? verify_stream(std::cin, checks, opts, args.jobs)
                                              : verify_exhaustive(args.max_n, checks, opts, args.jobs);
  if (!args.summary_only) {
    if (format == Format::Csv) std::cout << csv_header(checks) << '\n';
    for (const auto& r : agg.reports) std::cout << (format == Format::Csv ? report_to_csv(r) : report_to_json(r).dump()) << '\n';
  }
  for (const auto& e : agg.parse_errors) std::cerr << "stdin:" << e.line << ": " << e.message << '\n';
  // The summary is a JSON line. With csv rows on stdout it goes to stderr instead, which
  // keeps the csv stream rectangular.
  (format == Format::Csv && !args.summary_only ? std::cerr : std::cout) << summary_to_json(agg).dump() << '\n';

  if (agg.failures > 0) return kExitCheckFailure;
  if (!agg.parse_errors.empty()) return kExitUsage;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology and homotopy type of independence complexes of graphs"};
  app.require_subcommand(1);
  std::string format_name = "json";
  std::uint64_t seed = 0;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "Seed for sampled induced-subgraph checks");

  std::string input;
  bool with_complex = false;
  auto* homology = app.add_subcommand("homology", "Reduced integral homology of I(G)");
  homology->add_option("input", input, "graph6 string or file")->required();
  homology->add_flag("--complex", with_complex, "Include the face lists of I(G)");

  auto* classify_cmd = app.add_subcommand("classify", "Homotopy type of I(G) for a ternary graph");
  classify_cmd->add_option("input", input, "graph6 string or file")->required();

  auto* ternary = app.add_subcommand("ternary", "Test for induced cycles of length divisible by 3");
  ternary->add_option("input", input, "graph6 string or file")->required();

  int max_length = 0;
  auto* cycles = app.add_subcommand("oracle-cycles", "Check I(C_l) against the closed cycle formula");
  cycles->add_option("--max", max_length, "Largest cycle length")->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the theorem checks over many graphs");
  verify->add_option("--max-n", verify_args.max_n, "All non-isomorphic graphs with 1 <= n <= N");
  verify->add_flag("--stdin", verify_args.from_stdin, "Read graph6 lines from standard input");
  verify->add_option("--checks", verify_args.checks,
                     "Comma-separated subset of main,converse,kalai_meshulam,euler_bound,mv_subadditivity");
  verify->add_option("--jobs", verify_args.jobs, "Worker threads")
      ->default_val(std::max(1u, std::thread::hardware_concurrency()));
  verify->add_flag("--summary-only", verify_args.summary_only, "Print only the aggregate summary");

  // CLI11 options are global by default; allow them after the subcommand name too.
  for (auto* sub : {homology, classify_cmd, ternary, cycles, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const Format format = format_name == "csv" ? Format::Csv : Format::Json;
  try {
    if (*homology) return run_homology(input, with_complex, format);
    if (*classify_cmd) return run_classify(input, format);
    if (*ternary) return run_ternary(input, format);
    if (*cycles) return run_oracle_cycles(max_length, format);
    if (*verify) return run_verify(verify_args, format, seed);
  } catch (const ParseError& e) {
    std::cerr << "indcx: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "indcx: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "indcx: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
