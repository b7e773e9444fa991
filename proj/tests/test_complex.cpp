#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "indcx/complex.hpp"
#include "indcx/enumerate.hpp"
#include "indcx/report.hpp"
#include "oracles.hpp"

using namespace indcx;

namespace {

SimplicialComplex hollow_triangle() { return SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}}); }

std::vector<Mask> masks(std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Mask> out;
  for (auto s : sets) out.push_back(VertexSet(s).bits());
  return out;
}

}  // namespace

TEST_CASE("independence complexes of small graphs") {
  SECTION("K_3 is three isolated points") {
    auto k = independence_complex(complete_graph(3));
    CHECK(k.facets() == masks({{0}, {1}, {2}}));
    CHECK(k.top_dimension() == 0);
  }
  SECTION("C_4 is two disjoint edges") {
    auto k = independence_complex(cycle_graph(4));
    CHECK(k.facets() == masks({{0, 2}, {1, 3}}));
  }
  SECTION("the vertex-free graph gives {∅}") {
    auto k = independence_complex(Graph(0));
    CHECK(k.top_dimension() == -1);
    CHECK(k.face_count() == 1);
    CHECK(k.faces(-1) == std::vector<Mask>{0});
  }
}

TEST_CASE("f-vectors") {
  CHECK(f_vector(SimplicialComplex()).empty());
  CHECK(f_vector(hollow_triangle()) == std::vector<std::size_t>{3, 3});
  CHECK(f_vector(independence_complex(cycle_graph(4))) == std::vector<std::size_t>{4, 2});
}

TEST_CASE("boundary matrices") {
  SECTION("augmentation of two points") {
    auto two = SimplicialComplex::from_facets(2, {{0}, {1}});
    auto d0 = boundary_matrix(two, 0);
    CHECK(d0.to_dense() == std::vector<std::vector<std::int64_t>>{{1, 1}});
  }
  SECTION("hollow triangle ∂_1 has one +1 and one -1 per column") {
    auto d1 = boundary_matrix(hollow_triangle(), 1);
    REQUIRE(d1.rows() == 3);
    REQUIRE(d1.cols() == 3);
    for (std::size_t c = 0; c < 3; ++c) {
      int plus = 0, minus = 0;
      for (std::size_t r = 0; r < 3; ++r) {
        plus += d1.at(r, c) == 1;
        minus += d1.at(r, c) == -1;
      }
      CHECK(plus == 1);
      CHECK(minus == 1);
    }
  }
  SECTION("∂_1 ∘ ∂_2 vanishes on a solid triangle") {
    auto solid = SimplicialComplex::from_facets(3, {{0, 1, 2}});
    CHECK((boundary_matrix(solid, 1) * boundary_matrix(solid, 2)).is_zero());
  }
  SECTION("out-of-range dimensions give correctly shaped empty matrices") {
    auto t = hollow_triangle();
    CHECK(boundary_matrix(t, -1).rows() == 0);
    CHECK(boundary_matrix(t, -1).cols() == 1);
    CHECK(boundary_matrix(t, 2).rows() == 3);
    CHECK(boundary_matrix(t, 2).cols() == 0);
  }
}

TEST_CASE("reduced Euler characteristic from faces") {
  CHECK(face_euler(SimplicialComplex::from_facets(1, {{0}})) == 0);
  CHECK(face_euler(SimplicialComplex::from_facets(2, {{0}, {1}})) == 1);
  CHECK(face_euler(hollow_triangle()) == -1);
  CHECK(face_euler(SimplicialComplex()) == -1);
}

TEST_CASE("complex invariants over every graph with n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      const auto k = independence_complex(g);
      const auto sets = oracle::independent_sets(g);
      REQUIRE(k.face_count() == sets.size());
      for (Mask s : sets) REQUIRE(k.contains(s));
      for (int i = 0; i <= k.top_dimension(); ++i)
        REQUIRE((boundary_matrix(k, i) * boundary_matrix(k, i + 1)).is_zero());
      // Sign conventions differ; magnitudes agree.
      REQUIRE(std::abs(face_euler(k)) == std::abs(oracle::signed_independent_count(g)));
    }
  }
}

TEST_CASE("complexes are downward closed") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 12), 0.3, rng);
    REQUIRE(independence_complex(g).is_downward_closed());
  }
  std::vector<std::vector<int>> facets;
  for (int t = 0; t < 6; ++t) {
    std::vector<int> f;
    for (int v = 0; v < 7; ++v)
      if (rng() % 2) f.push_back(v);
    facets.push_back(f);
  }
  CHECK(SimplicialComplex::from_facets(7, facets).is_downward_closed());
}

TEST_CASE("an isolated vertex is a cone apex") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(static_cast<int>(rng() % 9), 0.4, rng);
    const Graph coned = disjoint_union(g, Graph(1));
    const int apex = g.n();
    for (Mask f : independence_complex(coned).facets()) REQUIRE(((f >> apex) & 1) == 1);
  }
}

TEST_CASE("JSON debug dump lists faces by dimension") {
  const auto dump = complex_to_json(independence_complex(path_graph(3)));
  CHECK(dump.dump() == R"({"-1":[[]],"0":[[0],[1],[2]],"1":[[0,2]]})");
}
