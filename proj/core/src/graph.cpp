#include "kdefect/graph.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace kdefect {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder)
    throw std::out_of_range("graph order must be in [0, 64], got " + std::to_string(n));
  adj_.fill(0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    g.adj_[u] |= std::uint64_t{1} << v;
    g.adj_[v] |= std::uint64_t{1} << u;
  }
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
  Graph g(n);
  assert(static_cast<int>(rows.size()) == n);
  const std::uint64_t valid = VertexSet::range(n).bits();
  for (int v = 0; v < n; ++v) {
    g.adj_[v] = rows[v];
    assert((rows[v] & ~valid) == 0);
    assert(!(rows[v] >> v & 1));
  }
#ifndef NDEBUG
  for (int v = 0; v < n; ++v)
    for (int u = v + 1; u < n; ++u)
      assert(((g.adj_[v] >> u) & 1) == ((g.adj_[u] >> v) & 1));
#endif
  (void)valid;
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

VertexSet Graph::neighborhood(int v) const {
  check_vertex(v);
  return VertexSet(adj_[v]);
}

VertexSet Graph::closed_neighborhood(int v) const {
  check_vertex(v);
  return VertexSet(adj_[v] | (std::uint64_t{1} << v));
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, std::popcount(adj_[v]));
  return best;
}

Graph Graph::add_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop edge");
  Graph g = *this;
  g.adj_[u] |= std::uint64_t{1} << v;
  g.adj_[v] |= std::uint64_t{1} << u;
  return g;
}

Graph Graph::delete_edge(int u, int v) const {
  if (!has_edge(u, v))
    throw std::invalid_argument("delete_edge(" + std::to_string(u) + "," + std::to_string(v) + "): not an edge");
  Graph g = *this;
  g.adj_[u] &= ~(std::uint64_t{1} << v);
  g.adj_[v] &= ~(std::uint64_t{1} << u);
  return g;
}

Graph Graph::induced_subgraph(VertexSet s) const {
  if (!s.subset_of(vertices()))
    throw std::out_of_range("induced_subgraph: set contains out-of-range vertices");
  Graph g(s.count());
  int new_of_old[kMaxOrder];
  int idx = 0;
  for (int v : s) new_of_old[v] = idx++;
  for (int v : s) {
    std::uint64_t row = 0;
    for (int u : VertexSet(adj_[v]) & s) row |= std::uint64_t{1} << new_of_old[u];
    g.adj_[new_of_old[v]] = row;
  }
  return g;
}

Graph Graph::delete_vertex(int v) const {
  check_vertex(v);
  return induced_subgraph(vertices() - VertexSet::single(v));
}

bool Graph::is_triangle_free() const {
  for (int v = 0; v < n_; ++v) {
    // Edges (v,u) with u > v; a triangle exists iff endpoints share a neighbor.
    for (int u : VertexSet(adj_[v] & ~((std::uint64_t{2} << v) - 1)))
      if (adj_[v] & adj_[u]) return false;
  }
  return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > Graph::kMaxOrder)
    throw std::out_of_range("disjoint_union: combined order exceeds 64");
  Graph g(a.order() + b.order());
  for (int v = 0; v < a.order(); ++v) g.adj_[v] = a.adj_[v];
  for (int v = 0; v < b.order(); ++v) g.adj_[a.n_ + v] = b.adj_[v] << a.n_;
  return g;
}

}  // namespace kdefect
