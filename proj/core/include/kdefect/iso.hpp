#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kdefect/graph.hpp"

namespace kdefect {

/// Canonical relabeling of a graph. Two graphs are isomorphic exactly when
/// their canon_g6 strings are equal.
struct CanonicalForm {
  std::string canon_g6;
  std::vector<int> perm;  // original vertex -> canonical position
};

/// Vertex bijection witnessing an isomorphism; mapping[u in G] = vertex of H.
using VertexMap = std::vector<int>;

/// Relabels g: vertex v becomes perm[v].
Graph apply_permutation(const Graph& g, std::span<const int> perm);

/// Canonical form by iterated partition refinement plus backtracking over
/// cells; the canonical string is the lexicographic minimum of the
/// adjacency bit string over all completed branches. Supports n <= 16.
CanonicalForm canonical_form(const Graph& g);

/// Isomorphism test via canonical keys; a returned map is validated
/// edge-by-edge before being handed out.
std::optional<VertexMap> are_isomorphic(const Graph& g, const Graph& h);

/// Least vertex u* (by index) with g - u* isomorphic to h, together with the
/// witnessing map from the relabeled survivors of g onto h. Requires
/// |V(g)| = |V(h)| + 1.
std::optional<std::pair<int, VertexMap>> contains_vertex_deleted_copy(const Graph& g, const Graph& h);

namespace detail {

/// Packed upper-triangle adjacency string (column order, 0/1 bits, first
/// bit most significant) for graphs of order <= 16. Integer comparison is
/// lexicographic string comparison.
struct AdjBits {
  std::uint64_t w0 = 0;
  std::uint64_t w1 = 0;

  void set(int idx) {
    if (idx < 64)
      w0 |= std::uint64_t{1} << (63 - idx);
    else
      w1 |= std::uint64_t{1} << (127 - idx);
  }
  bool get(int idx) const {
    return idx < 64 ? (w0 >> (63 - idx)) & 1 : (w1 >> (127 - idx)) & 1;
  }

  friend bool operator==(const AdjBits&, const AdjBits&) = default;
  friend std::strong_ordering operator<=>(const AdjBits& a, const AdjBits& b) {
    if (a.w0 != b.w0) return a.w0 <=> b.w0;
    return a.w1 <=> b.w1;
  }

  /// Lexicographic comparison restricted to the first nbits bits.
  static std::strong_ordering cmp_prefix(const AdjBits& a, const AdjBits& b, int nbits);
};

/// Hashable isomorphism-class key.
struct CanonKey {
  std::uint8_t n = 0;
  AdjBits bits;
  friend bool operator==(const CanonKey&, const CanonKey&) = default;
  friend std::strong_ordering operator<=>(const CanonKey& a, const CanonKey& b) {
    if (a.n != b.n) return a.n <=> b.n;
    return a.bits <=> b.bits;
  }
};

struct CanonKeyHash {
  std::size_t operator()(const CanonKey& k) const {
    std::uint64_t h = k.n;
    h = h * 0x9e3779b97f4a7c15ull ^ k.bits.w0;
    h = h * 0x9e3779b97f4a7c15ull ^ k.bits.w1;
    return static_cast<std::size_t>(h);
  }
};

/// Full canonicalization result used by the enumeration kernel.
struct Canon {
  int n = 0;
  std::array<std::uint8_t, 16> perm{};   // vertex -> canonical position
  std::array<std::uint8_t, 16> inv{};    // canonical position -> vertex
  AdjBits bits;                          // canonical adjacency string
  std::array<std::uint8_t, 16> orbit{};  // automorphism orbit representative per vertex

  CanonKey key() const { return CanonKey{static_cast<std::uint8_t>(n), bits}; }
  /// Vertex occupying the last canonical position.
  int canon_last() const { return inv[n - 1]; }
  bool same_orbit(int a, int b) const { return orbit[a] == orbit[b]; }
};

Canon canonicalize(const Graph& g);
/// Canonicalization respecting an ordered initial partition; cells must be
/// disjoint and cover all vertices.
Canon canonicalize_colored(const Graph& g, std::span<const VertexSet> cells);
/// Exact test for an automorphism mapping a to b (independent of the orbit
/// partition reported by canonicalize).
bool same_orbit_exact(const Graph& g, int a, int b);

CanonKey canonical_key(const Graph& g);

}  // namespace detail
}  // namespace kdefect
