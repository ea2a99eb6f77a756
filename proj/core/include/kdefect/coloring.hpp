#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdefect/graph.hpp"

namespace kdefect {

/// Assignment of every vertex to one of m color classes such that each
/// class is k-independent (every vertex has at most k neighbors of its own
/// color).
struct DefectivePartition {
  int m = 0;
  int k = 0;
  std::vector<std::uint8_t> assign;  // vertex -> class in 0..m-1

  VertexSet class_members(int c) const {
    VertexSet s;
    for (std::size_t v = 0; v < assign.size(); ++v)
      if (assign[v] == c) s.add(static_cast<int>(v));
    return s;
  }
  /// Re-validates the partition against g (every class k-independent,
  /// every vertex assigned a class below m).
  bool valid_for(const Graph& g) const;
  /// Witness text "0,2,4|1,3": classes in index order, members ascending.
  std::string to_string() const;
};

struct ChiResult {
  int chi = 0;
  DefectivePartition witness;  // empty for the null graph
};

/// True iff every v in s has at most k neighbors inside s.
bool is_k_independent(const Graph& g, VertexSet s, int k);

/// Complete search for an (m,k)-coloring. Vertices are branched in
/// descending-degree order (ties by index); a vertex may open class c only
/// when classes 0..c-1 are already nonempty.
std::optional<DefectivePartition> find_mk_coloring(const Graph& g, int m, int k);

/// chi_k(g): least m admitting an (m,k)-coloring, with a witness. The null
/// graph has chi 0; an edgeless nonempty graph has chi 1.
ChiResult defective_chromatic_number(const Graph& g, int k);

/// Degree bound 1 + floor(max_degree / (k+1)).
int lovasz_bound(const Graph& g, int k);

/// Criticality verdict with per-deletion witness partitions (one (m-1,k)
/// partition per vertex or per edge when the verdict is positive).
struct CriticalityResult {
  bool critical = false;
  std::vector<DefectivePartition> witnesses;
};

/// chi_k(g) = m and chi_k(g - u) < m for every vertex u.
CriticalityResult is_mk_critical(const Graph& g, int m, int k);
/// chi_k(g) = m and chi_k(g - e) < m for every edge e; witnesses follow the
/// lexicographic (u,v) edge order.
CriticalityResult is_mk_edge_critical(const Graph& g, int m, int k);

}  // namespace kdefect
