#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kdefect/graph.hpp"
#include "kdefect/report.hpp"
#include "kdefect/universe.hpp"

namespace kdefect {

/// Named graph with the property assertions it is expected to satisfy;
/// validate_catalog() evaluates every assertion with the coloring and
/// isomorphism machinery and cross-checks the paper-specific entries
/// against enumeration.
struct CatalogEntry {
  std::string name;
  Graph graph;
  std::vector<std::string> vertex_labels;  // index -> figure label ("u", "z1", ...)
  std::string note;                        // naming/disambiguation rule for this entry

  int order = 0;
  bool triangle_free = true;
  std::optional<int> chi1;
  std::optional<int> chi0;
  std::optional<int> max_degree;
  std::optional<int> regular_degree;
  std::optional<bool> critical_3_1;
  std::optional<bool> edge_critical_3_1;
};

/// The fixed catalog: G1..G5, G1uK1, G4uK1, petersen, grotzsch.
const std::vector<CatalogEntry>& paper_catalog();
const CatalogEntry& catalog_entry(std::string_view name);

/// Resolves fixed entries plus the parametric families P<n>, C<n>,
/// K<a>,<b> (also accepted as K<a>x<b>); unknown names are an error.
Graph catalog_graph(std::string_view name);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
Graph grotzsch_graph();

/// Validates a set of entries: (a) every stored assertion holds; (b) the
/// canonical keys of G1..G4 are pairwise distinct and equal to the keys of
/// the enumerated triangle-free order-9 classes with chi_1 = 3; (c) G5's
/// key equals the unique (3,1)-critical triangle-free order-10 key from
/// enumeration. Any mismatch is reported with the entry name and failed
/// assertion.
VerificationReport validate_catalog_entries(const std::vector<CatalogEntry>& entries,
                                            UniverseStore& store);
VerificationReport validate_catalog(UniverseStore& store);

}  // namespace kdefect
