#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace kdefect::testing {

namespace {

bool class_k_independent(const Graph& g, const std::vector<int>& assign, int cls, int k) {
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    if (assign[v] != cls) continue;
    int defect = 0;
    for (int u = 0; u < n; ++u)
      if (u != v && assign[u] == cls && g.has_edge(u, v)) ++defect;
    if (defect > k) return false;
  }
  return true;
}

// Enumerates set partitions as restricted growth strings; stops early once
// any partition into at most max_classes valid classes is found.
bool partition_search(const Graph& g, int max_classes, int k) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<int> rgs(n, 0);
  for (;;) {
    int classes = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (classes <= max_classes) {
      bool ok = true;
      for (int c = 0; c < classes && ok; ++c) ok = class_k_independent(g, rgs, c, k);
      if (ok) return true;
    }
    // next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= prefix_max) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
      // digit overflows, carry on
    }
    if (i == 0) return false;
  }
}

}  // namespace

bool oracle_mk_colorable(const Graph& g, int m, int k) { return partition_search(g, m, k); }

int oracle_chi(const Graph& g, int k) {
  if (g.order() == 0) return 0;
  for (int m = 1;; ++m)
    if (partition_search(g, m, k)) return m;
}

bool oracle_is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g.has_edge(u, v) != h.has_edge(p[u], p[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::vector<int> oracle_orbits(const Graph& g) {
  const int n = g.order();
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool aut = true;
    for (int u = 0; u < n && aut; ++u)
      for (int v = u + 1; v < n && aut; ++v)
        if (g.has_edge(u, v) != g.has_edge(p[u], p[v])) aut = false;
    if (!aut) continue;
    for (int v = 0; v < n; ++v) {
      int a = find(v), b = find(p[v]);
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  for (int v = 0; v < n; ++v) root[v] = find(v);
  return root;
}

bool naive_triangle_free(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) return false;
  return true;
}

Graph random_graph(int n, double edge_prob, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(edge_prob);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g = g.add_edge(u, v);
  return g;
}

Graph random_triangle_free(int n, double edge_prob, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution coin(edge_prob);
  Graph g(n);
  for (auto [u, v] : pairs) {
    if (!coin(rng)) continue;
    if (!(g.neighborhood(u) & g.neighborhood(v)).empty()) continue;  // would close a triangle
    g = g.add_edge(u, v);
  }
  return g;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace kdefect::testing
