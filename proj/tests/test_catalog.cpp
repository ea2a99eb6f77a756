#include <doctest.h>

#include <set>

#include "kdefect/catalog.hpp"
#include "kdefect/coloring.hpp"
#include "kdefect/graph6.hpp"
#include "kdefect/iso.hpp"
#include "kdefect/universe.hpp"

using namespace kdefect;

namespace {

UniverseStore& shared_store() {
  static UniverseStore store({}, 2);
  return store;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("families") {
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(cycle_graph(6).edge_count() == 6);
  CHECK(complete_bipartite(3, 3).edge_count() == 9);
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(empty_graph(5).edge_count() == 0);
  CHECK(are_isomorphic(catalog_graph("P5"), path_graph(5)).has_value());
  CHECK(are_isomorphic(catalog_graph("C6"), cycle_graph(6)).has_value());
  CHECK(are_isomorphic(catalog_graph("K3,3"), complete_bipartite(3, 3)).has_value());
  CHECK(are_isomorphic(catalog_graph("K3x3"), complete_bipartite(3, 3)).has_value());
  CHECK(are_isomorphic(catalog_graph("K4"), complete_graph(4)).has_value());
  CHECK_THROWS_AS((void)catalog_graph("G9"), std::invalid_argument);
  CHECK_THROWS_AS((void)catalog_graph("frucht"), std::invalid_argument);
  CHECK_THROWS_AS((void)cycle_graph(2), std::invalid_argument);
}

TEST_CASE("paper-specific entries carry figure labels") {
  for (const char* name : {"G1", "G2", "G3", "G4", "G5", "G1uK1", "G4uK1"}) {
    const auto& e = catalog_entry(name);
    CHECK(static_cast<int>(e.vertex_labels.size()) == e.graph.order());
  }
  CHECK(catalog_entry("G5").vertex_labels[0] == "u");
  CHECK(catalog_entry("G5").vertex_labels[9] == "z");
}

TEST_CASE("entry expectations hold when evaluated directly") {
  const Graph g1 = catalog_graph("G1");
  CHECK(g1.order() == 9);
  CHECK(g1.is_triangle_free());
  CHECK(defective_chromatic_number(g1, 1).chi == 3);
  CHECK(is_mk_critical(g1, 3, 1).critical);
  CHECK(is_mk_edge_critical(g1, 3, 1).critical);

  const Graph g5 = catalog_graph("G5");
  CHECK(g5.order() == 10);
  CHECK(g5.is_triangle_free());
  CHECK(g5.max_degree() == 5);
  CHECK(defective_chromatic_number(g5, 1).chi == 3);
  CHECK(is_mk_critical(g5, 3, 1).critical);
  CHECK(is_mk_edge_critical(g5, 3, 1).critical);

  const Graph pet = catalog_graph("petersen");
  CHECK(pet.order() == 10);
  CHECK(pet.is_triangle_free());
  for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
}

TEST_CASE("G1..G4 are pairwise non-isomorphic; G1..G3 share order and max degree") {
  std::set<std::string> keys;
  for (const char* name : {"G1", "G2", "G3", "G4"})
    keys.insert(canonical_form(catalog_graph(name)).canon_g6);
  CHECK(keys.size() == 4);
  for (const char* name : {"G1", "G2", "G3"}) {
    CHECK(catalog_graph(name).order() == 9);
    CHECK(catalog_graph(name).max_degree() == 4);
  }
  // the three graphs form an edge progression between the two right-hand boxes
  CHECK(catalog_graph("G1").edge_count() == 14);
  CHECK(catalog_graph("G2").edge_count() == 15);
  CHECK(catalog_graph("G3").edge_count() == 16);
  CHECK(catalog_graph("G4").edge_count() == 14);
}

TEST_CASE("the alternate depiction of G2 is the same graph") {
  // boxes {z1,z2}, {z,u4}, {u2,u3}, {u,z3}; v joined to {z1,z2} and
  // {u2,u3}; {z1,z2} joined to {z,u4}; {u2,u3} joined to {u,z3}; plus the
  // single edges z-z3, z3-u4, u4-u.
  // order: 0=v 1=z1 2=z2 3=z 4=u4 5=u2 6=u3 7=u 8=z3
  const Graph alt = Graph::from_edges(9, {{0, 1}, {0, 2}, {0, 5}, {0, 6},
                                          {1, 3}, {1, 4}, {2, 3}, {2, 4},
                                          {5, 7}, {5, 8}, {6, 7}, {6, 8},
                                          {3, 8}, {8, 4}, {4, 7}});
  CHECK(are_isomorphic(alt, catalog_graph("G2")).has_value());
}

TEST_CASE("validate_catalog cross-checks against enumeration") {
  const auto report = validate_catalog(shared_store());
  CHECK(report.verified());
  CHECK(report.counterexamples.empty());
  CHECK(report.universe_size == shared_store().triangle_free(9).size() +
                                    shared_store().triangle_free(10).size());
}

TEST_CASE("a corrupted entry is flagged by name") {
  auto entries = paper_catalog();
  for (auto& e : entries)
    if (e.name == "G5") e.graph = e.graph.delete_edge(9, 7).add_edge(7, 8);  // swap one edge
  const auto report = validate_catalog_entries(entries, shared_store());
  CHECK(!report.verified());
  bool flags_g5 = false;
  for (const auto& c : report.counterexamples) flags_g5 |= c.reason.rfind("G5", 0) == 0;
  CHECK(flags_g5);
}

TEST_CASE("catalog graph6 strings round-trip") {
  for (const auto& e : paper_catalog()) {
    CHECK(parse_graph6(write_graph6(e.graph)) == e.graph);
  }
}

}  // TEST_SUITE
