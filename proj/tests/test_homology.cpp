#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "indcx/enumerate.hpp"
#include "indcx/homology.hpp"
#include "oracles.hpp"

using namespace indcx;

namespace {

// Six-vertex minimal triangulation of the real projective plane.
SimplicialComplex projective_plane() {
  return SimplicialComplex::from_facets(
      6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

}  // namespace

TEST_CASE("reduced homology of basic complexes") {
  SECTION("hollow triangle is S^1") {
    auto h = reduced_homology(SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(h[1].free_rank == 1);
    CHECK(h[0].trivial());
    CHECK(h[-1].trivial());
    CHECK(homology_class(h) == HomologyType::sphere(1));
  }
  SECTION("{∅} has H_{-1} = Z") {
    auto h = reduced_homology(SimplicialComplex());
    CHECK(h[-1].free_rank == 1);
    CHECK(homology_class(h) == HomologyType::sphere(-1));
    CHECK(betti(h).empty());
    CHECK(total_betti(h) == 0);
  }
  SECTION("full simplices are acyclic") {
    for (int k = 1; k <= 6; ++k) {
      std::vector<int> all(static_cast<std::size_t>(k));
      std::iota(all.begin(), all.end(), 0);
      auto h = reduced_homology(SimplicialComplex::from_facets(k, {all}));
      CHECK(h.all_trivial());
      CHECK(homology_class(h) == HomologyType::point());
    }
  }
}

TEST_CASE("projective plane has Z/2 torsion and no free homology") {
  const auto rp2 = projective_plane();
  REQUIRE(f_vector(rp2) == std::vector<std::size_t>{6, 15, 10});
  // Each edge lies in exactly two triangles.
  for (Mask e : rp2.faces(1)) {
    int cofaces = 0;
    for (Mask t : rp2.faces(2)) cofaces += (t & e) == e;
    REQUIRE(cofaces == 2);
  }
  const auto h = reduced_homology(rp2);
  CHECK(h[1].free_rank == 0);
  CHECK(h[1].torsion == std::vector<BigInt>{2});
  CHECK(h[0].trivial());
  CHECK(h[2].trivial());
  CHECK(total_betti(h) == 0);
  CHECK(homology_class(h) == HomologyType::other());
}

TEST_CASE("Betti numbers of cycle complexes") {
  CHECK(betti(independence_complex(cycle_graph(6))) == std::vector<std::size_t>{0, 2, 0});
  CHECK(total_betti(independence_complex(cycle_graph(6))) == 2);
  CHECK(betti(independence_complex(cycle_graph(5))) == std::vector<std::size_t>{0, 1});
  CHECK(total_betti(independence_complex(cycle_graph(5))) == 1);
  CHECK(total_betti(independence_complex(disjoint_union(cycle_graph(6), Graph(1)))) == 0);

  CHECK(euler_from_betti(independence_complex(cycle_graph(5))) == -1);
  CHECK(euler_from_betti(independence_complex(cycle_graph(6))) == -2);
  CHECK(euler_from_betti(independence_complex(Graph(1))) == 0);
}

TEST_CASE("homology classes") {
  CHECK(homology_class(independence_complex(cycle_graph(5))) == HomologyType::sphere(1));
  CHECK(homology_class(independence_complex(cycle_graph(6))) == HomologyType::other());
  CHECK(homology_class(independence_complex(disjoint_union(cycle_graph(5), Graph(1)))) == HomologyType::point());
  CHECK(homology_class(independence_complex(path_graph(4))) == HomologyType::point());
}

TEST_CASE("Euler–Poincaré on {∅} differs by the dimension -1 term") {
  const SimplicialComplex void_complex;
  const auto h = reduced_homology(void_complex);
  CHECK(face_euler(void_complex) == -1);
  CHECK(euler_from_betti(h) == 0);
  CHECK(face_euler(void_complex) == euler_from_betti(h) - static_cast<std::int64_t>(h[-1].free_rank));
}

TEST_CASE("Euler–Poincaré and rank bounds over every graph with 1 <= n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : nonisomorphic_graphs(n)) {
      const auto k = independence_complex(g);
      const auto h = reduced_homology(k);
      REQUIRE(euler_from_betti(h) == face_euler(k));
      for (int i = 0; i <= k.top_dimension(); ++i) {
        const auto ri = smith_normal_form(boundary_matrix(k, i)).rank;
        const auto rn = smith_normal_form(boundary_matrix(k, i + 1)).rank;
        REQUIRE(ri + rn <= k.faces(i).size());
      }
    }
}

TEST_CASE("exact-sequence subadditivity on random graphs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(8 + static_cast<int>(rng() % 3), 0.35, rng);
    const auto whole = reduced_homology(independence_complex(g));
    for (int v = 0; v < g.n(); ++v) {
      const auto hv = reduced_homology(independence_complex(residual(g, {}, VertexSet{v}).graph));
      const auto hn = reduced_homology(independence_complex(residual(g, VertexSet{v}, {}).graph));
      for (int i = -1; i <= g.n(); ++i) REQUIRE(whole[i].free_rank <= hv[i].free_rank + hn[i - 1].free_rank);
    }
  }
}
