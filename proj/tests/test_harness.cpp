#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "indcx/enumerate.hpp"
#include "indcx/harness.hpp"
#include "indcx/report.hpp"

using namespace indcx;

namespace {

const std::vector<Check> kEvery(std::begin(kAllChecks), std::end(kAllChecks));

std::string dump(const AggregateReport& agg) {
  std::string out;
  for (const auto& r : agg.reports) out += report_to_json(r).dump() + "\n";
  return out + summary_to_json(agg).dump();
}

}  // namespace

TEST_CASE("check names round-trip") {
  for (Check c : kAllChecks) CHECK(parse_check(check_name(c)) == c);
  CHECK(check_name(Check::KalaiMeshulam) == "kalai_meshulam");
  CHECK_FALSE(parse_check("nope"));
}

TEST_CASE("main check on named graphs") {
  CHECK(check_main_theorem(cycle_graph(5)).passed);
  CHECK(check_main_theorem(cycle_graph(5)).detail == "S^1");
  CHECK(check_main_theorem(path_graph(4)).detail == "contractible");
  const auto c6 = check_main_theorem(cycle_graph(6));
  CHECK(c6.passed);
  CHECK(c6.detail.find("vacuous") != std::string::npos);
}

TEST_CASE("converse check on named graphs") {
  const auto c6 = check_converse(cycle_graph(6));
  CHECK(c6.passed);
  CHECK(c6.detail == "C_6: beta_1 = 2");
  CHECK(check_converse(complete_graph(3)).detail == "C_3: beta_0 = 2");
  CHECK(check_converse(cycle_graph(9)).detail == "C_9: beta_2 = 2");
  CHECK_THROWS_AS(check_converse(cycle_graph(5)), std::invalid_argument);
}

TEST_CASE("total Betti bound on named graphs") {
  CHECK(check_kalai_meshulam(cycle_graph(7)).passed);
  CHECK(check_kalai_meshulam(Graph(5)).passed);
  CHECK(check_kalai_meshulam(cycle_graph(6)).detail.find("vacuous") != std::string::npos);
}

TEST_CASE("Euler bound holds in both directions on named graphs") {
  CHECK(check_euler_bound(cycle_graph(5)).passed);
  CHECK(check_euler_bound(Graph(1)).passed);
  const auto c6 = check_euler_bound(cycle_graph(6));
  CHECK(c6.passed);
  CHECK(c6.detail == "witness with |chi| >= 2");
}

TEST_CASE("Euler bound sampling keeps the cycle witness") {
  // Large enough to force sampling; the induced C_6 must still be examined.
  Graph g = disjoint_union(cycle_graph(6), path_graph(8));
  HarnessOptions opts;
  opts.exhaustive_order = 4;
  opts.sampled_subsets = 5;
  CHECK(check_euler_bound(g, opts).passed);
}

TEST_CASE("exact-sequence subadditivity on named graphs") {
  for (const Graph& g : {cycle_graph(5), cycle_graph(6), complete_graph(4), path_graph(5), Graph(3)})
    CHECK(check_mv_subadditivity(g).passed);
}

TEST_CASE("exhaustive verification over small orders") {
  const auto four = verify_exhaustive(4, kEvery);
  CHECK(four.graphs == 18);
  CHECK(four.failures == 0);
  CHECK(four.parse_errors.empty());
  for (Check c : kAllChecks) CHECK(four.check_failures.at(check_name(c)) == 0);

  const auto one = verify_exhaustive(1, kEvery);
  CHECK(one.graphs == 1);
  CHECK(one.ternary == 1);
  REQUIRE(one.reports.size() == 1);
  CHECK(one.reports[0].homotopy == HomotopyClass::Contractible());

  CHECK_THROWS_AS(verify_exhaustive(9, kEvery), std::invalid_argument);
}

TEST_CASE("report fields for C_5 and C_6") {
  Classifier classifier;
  const auto c5 = verify_graph(cycle_graph(5), kEvery, classifier);
  CHECK(c5.g6 == "Dhc");
  CHECK(c5.ternary);
  CHECK(c5.betti == std::vector<std::size_t>{0, 1});
  CHECK(c5.chi == -1);
  CHECK(c5.passed());

  const auto c6 = verify_graph(cycle_graph(6), kEvery, classifier);
  CHECK_FALSE(c6.ternary);
  CHECK_FALSE(c6.homotopy);
  REQUIRE(c6.cycle);
  CHECK(c6.cycle->length() == 6);
  CHECK(c6.chi == -2);
  const Json j = report_to_json(c6);
  CHECK(j["class"] == "n/a");
  CHECK(j["witness"]["kind"] == "cycle");
  CHECK(j["betti"] == Json::array({0, 2, 0}));
}

TEST_CASE("streamed graph6 input with a malformed line") {
  std::istringstream in("Dhc\n\nnot-a-graph\nEhEG\r\n");
  const auto agg = verify_stream(in, kEvery);
  CHECK(agg.graphs == 2);
  CHECK(agg.ternary == 1);
  CHECK(agg.failures == 0);
  REQUIRE(agg.parse_errors.size() == 1);
  CHECK(agg.parse_errors[0].line == 3);
}

TEST_CASE("streaming the enumeration reproduces the exhaustive totals") {
  std::ostringstream lines;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : nonisomorphic_graphs(n)) lines << encode_graph6(g) << '\n';
  std::istringstream in(lines.str());
  const auto streamed = verify_stream(in, kEvery);
  const auto direct = verify_exhaustive(5, kEvery);
  CHECK(streamed.graphs == direct.graphs);
  CHECK(streamed.ternary == direct.ternary);
  CHECK(streamed.failures == direct.failures);
  CHECK(dump(streamed) == dump(direct));
}

TEST_CASE("output is identical across thread counts") {
  CHECK(dump(verify_exhaustive(5, kEvery, {}, 1)) == dump(verify_exhaustive(5, kEvery, {}, 3)));
}

TEST_CASE("csv rows line up with the header") {
  Classifier classifier;
  const auto r = verify_graph(cycle_graph(5), kEvery, classifier);
  CHECK(csv_header(kEvery) == "g6,n,ternary,class,betti,chi,main,converse,kalai_meshulam,euler_bound,mv_subadditivity");
  CHECK(report_to_csv(r) == "Dhc,5,true,S^1,0 1,-1,pass,pass,pass,pass,pass");
}
