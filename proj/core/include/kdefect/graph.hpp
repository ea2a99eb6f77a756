#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>

namespace kdefect {

/// Subset of the vertex indices 0..63 of some graph, stored as one machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  /// The full set {0, ..., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Least element; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr VertexSet& add(int v) { bits_ |= std::uint64_t{1} << v; return *this; }
  constexpr VertexSet& remove(int v) { bits_ &= ~(std::uint64_t{1} << v); return *this; }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  /// Iterates set members in ascending order.
  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on at most 64 vertices.
///
/// Adjacency is stored as one 64-bit row per vertex (row v = open
/// neighborhood of v). Invariants maintained by every constructor and
/// operation: rows are symmetric, the diagonal is empty, and all bits at
/// positions >= order() are zero. Operations that edit the graph return a
/// new value; instances can be shared freely across threads.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() : n_(0) { adj_.fill(0); }
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
  /// Low-level constructor from raw adjacency rows; rows must already be
  /// symmetric, loop-free and clear above n (checked by assert only).
  static Graph from_rows(int n, std::span<const std::uint64_t> rows);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  std::size_t edge_count() const;
  bool has_edge(int u, int v) const;

  VertexSet neighborhood(int v) const;
  VertexSet closed_neighborhood(int v) const;
  int degree(int v) const;
  /// Maximum degree; 0 for the null graph.
  int max_degree() const;

  Graph add_edge(int u, int v) const;
  /// Removes an existing edge; deleting a non-edge is an error.
  Graph delete_edge(int u, int v) const;
  /// Deletes v and relabels the survivors by ascending original index.
  Graph delete_vertex(int v) const;
  /// Subgraph induced on s, relabeled by ascending original index.
  Graph induced_subgraph(VertexSet s) const;

  /// True iff no edge's endpoints share a neighbor.
  bool is_triangle_free() const;

  std::uint64_t row(int v) const { return adj_[v]; }

  friend Graph disjoint_union(const Graph& a, const Graph& b);

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }

 private:
  void check_vertex(int v) const;
  int n_;
  std::array<std::uint64_t, kMaxOrder> adj_;
};

/// Block-diagonal union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace kdefect
