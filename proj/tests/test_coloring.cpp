#include <doctest.h>

#include "kdefect/catalog.hpp"
#include "kdefect/coloring.hpp"
#include "kdefect/enumerate.hpp"
#include "kdefect/graph.hpp"
#include "oracles.hpp"

using namespace kdefect;
namespace kt = kdefect::testing;

TEST_SUITE("coloring") {

TEST_CASE("k-independence") {
  const Graph p3 = path_graph(3);
  CHECK(is_k_independent(p3, VertexSet(0b101), 0));  // the two endpoints
  CHECK(!is_k_independent(p3, VertexSet(0b111), 1)); // center has 2 same-set neighbors
  CHECK(is_k_independent(p3, VertexSet(0b111), 2));
  CHECK(is_k_independent(p3, VertexSet(), 0));
  CHECK_THROWS_AS((void)is_k_independent(p3, VertexSet(0b1000), 0), std::out_of_range);
}

TEST_CASE("find_mk_coloring on C5") {
  const Graph c5 = cycle_graph(5);
  auto p = find_mk_coloring(c5, 2, 1);
  REQUIRE(p.has_value());
  CHECK(p->valid_for(c5));
  CHECK(!kt::oracle_mk_colorable(c5, 2, 0));  // but not with k=0
  CHECK(kt::oracle_mk_colorable(c5, 2, 1));
}

TEST_CASE("G1 is not (2,1)-colorable") {
  CHECK(!find_mk_coloring(catalog_graph("G1"), 2, 1).has_value());
}

TEST_CASE("the ceiling bound always yields a coloring") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + int(rng() % 10);
    const int k = int(rng() % 3);
    const Graph g = kt::random_graph(n, 0.5, rng);
    const int m = (n + k) / (k + 1);  // ceil(n/(k+1))
    auto p = find_mk_coloring(g, m, k);
    REQUIRE(p.has_value());
    CHECK(p->valid_for(g));
  }
}

TEST_CASE("chi spot values") {
  CHECK(defective_chromatic_number(Graph(1), 1).chi == 1);
  CHECK(defective_chromatic_number(catalog_graph("G5"), 1).chi == 3);
  CHECK(defective_chromatic_number(petersen_graph(), 1).chi == 2);
  CHECK(defective_chromatic_number(Graph(), 2).chi == 0);
  CHECK(defective_chromatic_number(Graph(4), 0).chi == 1);
  CHECK(defective_chromatic_number(complete_graph(4), 0).chi == 4);
}

TEST_CASE("search equals the partition oracle for every graph with n <= 6 and k <= 2") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : brute_force_enumerate(n, [](const Graph&) { return true; })) {
      for (int k = 0; k <= 2; ++k) {
        const auto r = defective_chromatic_number(g, k);
        CHECK(r.chi == kt::oracle_chi(g, k));
        CHECK(r.witness.valid_for(g));
      }
    }
  }
}

TEST_CASE("degree bound") {
  CHECK(lovasz_bound(cycle_graph(5), 1) == 2);
  CHECK(lovasz_bound(complete_bipartite(1, 6), 1) == 4);  // max degree 6
  CHECK(lovasz_bound(Graph(3), 2) == 1);
  // at k=0 the bound is the greedy max_degree + 1
  std::mt19937_64 rng(32);
  for (int iter = 0; iter < 100; ++iter) {
    const Graph g = kt::random_graph(1 + int(rng() % 10), 0.4, rng);
    CHECK(lovasz_bound(g, 0) == g.max_degree() + 1);
    const int k = int(rng() % 3);
    CHECK(defective_chromatic_number(g, k).chi <= lovasz_bound(g, k));
  }
}

TEST_CASE("monotonicity laws on seeded random graphs") {
  std::mt19937_64 rng(33);
  for (int iter = 0; iter < 1000; ++iter) {
    const int n = 1 + int(rng() % 10);
    const int k = int(rng() % 3);
    const Graph g = kt::random_graph(n, 0.4, rng);
    const int chi = defective_chromatic_number(g, k).chi;
    for (int v = 0; v < n; ++v) {
      const int sub = defective_chromatic_number(g.delete_vertex(v), k).chi;
      CHECK(sub <= chi);
      CHECK(chi <= sub + 1);
    }
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v)) continue;
        const int sub = defective_chromatic_number(g.delete_edge(u, v), k).chi;
        CHECK(sub <= chi);
        CHECK(chi <= sub + 1);
      }
    CHECK(defective_chromatic_number(g, k + 1).chi <= chi);
    CHECK(chi <= defective_chromatic_number(g, 0).chi);
  }
}

TEST_CASE("chi of a disjoint union is the max of the parts") {
  std::mt19937_64 rng(34);
  for (int iter = 0; iter < 200; ++iter) {
    const Graph a = kt::random_graph(1 + int(rng() % 6), 0.5, rng);
    const Graph b = kt::random_graph(1 + int(rng() % 6), 0.5, rng);
    const int k = int(rng() % 3);
    CHECK(defective_chromatic_number(disjoint_union(a, b), k).chi ==
          std::max(defective_chromatic_number(a, k).chi, defective_chromatic_number(b, k).chi));
  }
}

TEST_CASE("two-coloring from the near-dominating decomposition") {
  // For triangle-free g with max-degree vertex u, B = V - N[u], H = G[B]
  // and z of maximum H-degree: if H has max degree |B|-1 and z has at most
  // 2k neighbors in N(u), then chi_k(g) <= 2.
  std::mt19937_64 rng(35);
  int hits = 0;
  for (int iter = 0; iter < 4000; ++iter) {
    const int n = 2 + int(rng() % 9);
    const int k = int(rng() % 3);
    const Graph g = kt::random_triangle_free(n, 0.6, rng);
    const int dmax = g.max_degree();
    for (int u = 0; u < n; ++u) {
      if (g.degree(u) != dmax) continue;
      const VertexSet b = g.vertices() - g.closed_neighborhood(u);
      const Graph h = g.induced_subgraph(b);
      if (h.order() == 0 || h.max_degree() != h.order() - 1) continue;
      std::vector<int> bverts;
      for (int v : b) bverts.push_back(v);
      for (int zi = 0; zi < h.order(); ++zi) {
        if (h.degree(zi) != h.max_degree()) continue;
        if ((g.neighborhood(u) & g.neighborhood(bverts[zi])).count() <= 2 * k) {
          CHECK(defective_chromatic_number(g, k).chi <= 2);
          ++hits;
        }
      }
    }
  }
  CHECK(hits > 100);  // hypothesis must fire often enough to mean something
}

TEST_CASE("criticality spot values") {
  CHECK(is_mk_critical(catalog_graph("G5"), 3, 1).critical);
  CHECK(is_mk_edge_critical(catalog_graph("G5"), 3, 1).critical);
  CHECK(!is_mk_critical(catalog_graph("G1uK1"), 3, 1).critical);
  CHECK(is_mk_edge_critical(catalog_graph("G1uK1"), 3, 1).critical);
  CHECK(is_mk_critical(cycle_graph(5), 3, 0).critical);
  CHECK(is_mk_edge_critical(catalog_graph("G1"), 3, 1).critical);
  CHECK(!is_mk_edge_critical(catalog_graph("G2"), 3, 1).critical);
  CHECK_THROWS_AS((void)is_mk_critical(cycle_graph(5), 1, 0), std::invalid_argument);
}

TEST_CASE("criticality witnesses re-validate") {
  const Graph g5 = catalog_graph("G5");
  const auto r = is_mk_critical(g5, 3, 1);
  REQUIRE(r.critical);
  REQUIRE(r.witnesses.size() == 10);
  for (int u = 0; u < 10; ++u) {
    CHECK(r.witnesses[u].m == 2);
    CHECK(r.witnesses[u].valid_for(g5.delete_vertex(u)));
  }

  const auto e = is_mk_edge_critical(g5, 3, 1);
  REQUIRE(e.critical);
  CHECK(e.witnesses.size() == g5.edge_count());
  std::size_t w = 0;
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) {
      if (!g5.has_edge(u, v)) continue;
      CHECK(e.witnesses[w].valid_for(g5.delete_edge(u, v)));
      ++w;
    }
}

TEST_CASE("witness text format") {
  DefectivePartition p;
  p.m = 2;
  p.k = 1;
  p.assign = {0, 1, 0, 1, 0};
  CHECK(p.to_string() == "0,2,4|1,3");
}

}  // TEST_SUITE
