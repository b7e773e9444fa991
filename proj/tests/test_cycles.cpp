#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "indcx/cycles.hpp"
#include "indcx/enumerate.hpp"
#include "oracles.hpp"

using namespace indcx;

namespace {

bool is_valid_witness(const Graph& g, const CycleWitness& w) {
  const int len = w.length();
  if (len < 3) return false;
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.has_edge(w.vertices[i], w.vertices[j]) != consecutive) return false;
    }
  return true;
}

std::set<Mask> cycle_sets(const Graph& g) {
  std::set<Mask> out;
  for (const auto& w : enumerate_chordless_cycles(g)) {
    REQUIRE(is_valid_witness(g, w));
    REQUIRE(out.insert(w.mask()).second);  // each cycle reported once
  }
  return out;
}

}  // namespace

TEST_CASE("chordless cycles of named graphs") {
  auto c6 = enumerate_chordless_cycles(cycle_graph(6));
  REQUIRE(c6.size() == 1);
  CHECK(c6[0].length() == 6);

  CHECK(enumerate_chordless_cycles(path_graph(7)).empty());
  CHECK(enumerate_chordless_cycles(star_graph(5)).empty());

  auto k4 = enumerate_chordless_cycles(complete_graph(4));
  CHECK(k4.size() == 4);
  for (const auto& w : k4) CHECK(w.length() == 3);
}

TEST_CASE("a cycle has exactly one chordless cycle, itself") {
  for (int len = 3; len <= 20; ++len) {
    auto cycles = enumerate_chordless_cycles(cycle_graph(len));
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].length() == len);
  }
}

TEST_CASE("enumeration agrees with the subset-scan oracle on all graphs with n <= 7") {
  for (int n = 3; n <= 7; ++n)
    for (const Graph& g : nonisomorphic_graphs(n)) REQUIRE(cycle_sets(g) == oracle::chordless_cycle_sets(g));
}

TEST_CASE("enumeration agrees with the subset-scan oracle on random labeled graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(n, 0.2 + 0.5 * (trial % 5) / 4.0, rng);
    REQUIRE(cycle_sets(g) == oracle::chordless_cycle_sets(g));
  }
}

TEST_CASE("stop predicate ends the enumeration early") {
  const Graph k5 = complete_graph(5);
  int seen = 0;
  auto found = enumerate_chordless_cycles(k5, [&](const CycleWitness&) { return ++seen == 2; });
  CHECK(found.size() == 2);
  CHECK(enumerate_chordless_cycles(k5).size() == 10);
}

TEST_CASE("ternary recognition") {
  CHECK(is_ternary(cycle_graph(5)).ternary);
  CHECK_FALSE(is_ternary(cycle_graph(5)).witness);

  auto c6 = is_ternary(cycle_graph(6));
  CHECK_FALSE(c6.ternary);
  REQUIRE(c6.witness);
  CHECK(c6.witness->length() == 6);

  auto k4 = is_ternary(complete_graph(4));
  CHECK_FALSE(k4.ternary);
  REQUIRE(k4.witness);
  CHECK(k4.witness->length() == 3);

  for (int len = 3; len <= 30; ++len) CHECK(is_ternary(cycle_graph(len)).ternary == (len % 3 != 0));
}

TEST_CASE("ternary witnesses are induced cycles of length divisible by 3") {
  for (int n = 3; n <= 7; ++n)
    for (const Graph& g : nonisomorphic_graphs(n)) {
      const auto t = is_ternary(g);
      const auto cycles = oracle::chordless_cycle_sets(g);
      const bool expect = std::none_of(cycles.begin(), cycles.end(), [](Mask s) { return popcount(s) % 3 == 0; });
      REQUIRE(t.ternary == expect);
      if (!t.ternary) {
        REQUIRE(t.witness->length() % 3 == 0);
        REQUIRE(is_valid_witness(g, *t.witness));
      }
    }
}
