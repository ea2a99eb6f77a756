#include "kdefect/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kdefect {

bool DefectivePartition::valid_for(const Graph& g) const {
  if (static_cast<int>(assign.size()) != g.order()) return false;
  for (auto c : assign)
    if (c >= m) return false;
  for (int c = 0; c < m; ++c)
    if (!is_k_independent(g, class_members(c), k)) return false;
  return true;
}

std::string DefectivePartition::to_string() const {
  std::string out;
  for (int c = 0; c < m; ++c) {
    if (c) out.push_back('|');
    bool first = true;
    for (int v : class_members(c)) {
      if (!first) out.push_back(',');
      first = false;
      out += std::to_string(v);
    }
  }
  return out;
}

bool is_k_independent(const Graph& g, VertexSet s, int k) {
  if (!s.subset_of(g.vertices()))
    throw std::out_of_range("is_k_independent: set contains out-of-range vertices");
  for (int v : s)
    if ((g.neighborhood(v) & s).count() > k) return false;
  return true;
}

namespace {

struct ColoringSearch {
  const Graph& g;
  int m, k, n;
  std::vector<int> order;        // branch order: descending degree, ties by index
  std::vector<std::uint8_t> color;  // by vertex; 0xff = unassigned
  std::vector<int> defect;       // same-color neighbor count, by vertex
  std::vector<int> class_size;

  ColoringSearch(const Graph& graph, int m_, int k_)
      : g(graph), m(m_), k(k_), n(graph.order()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    color.assign(n, 0xff);
    defect.assign(n, 0);
    class_size.assign(m, 0);
  }

  bool assignable(int v, int c) const {
    int mine = 0;
    for (int u : g.neighborhood(v)) {
      if (color[u] != c) continue;
      if (defect[u] + 1 > k) return false;
      if (++mine > k) return false;
    }
    return true;
  }

  void place(int v, int c) {
    color[v] = static_cast<std::uint8_t>(c);
    ++class_size[c];
    for (int u : g.neighborhood(v))
      if (color[u] == c) {
        ++defect[u];
        ++defect[v];
      }
  }

  void unplace(int v) {
    const int c = color[v];
    for (int u : g.neighborhood(v))
      if (color[u] == c) {
        --defect[u];
        --defect[v];
      }
    --class_size[c];
    color[v] = 0xff;
  }

  bool solve(int idx) {
    if (idx == n) return true;
    const int v = order[idx];
    // symmetry breaking: a new class may be opened only in sequence
    int limit = m;
    for (int c = 0; c < m; ++c)
      if (class_size[c] == 0) {
        limit = c + 1;
        break;
      }
    for (int c = 0; c < limit; ++c) {
      if (!assignable(v, c)) continue;
      place(v, c);
      if (solve(idx + 1)) return true;
      unplace(v);
    }
    return false;
  }
};

}  // namespace

std::optional<DefectivePartition> find_mk_coloring(const Graph& g, int m, int k) {
  if (m < 1) throw std::invalid_argument("find_mk_coloring: m must be >= 1");
  if (k < 0) throw std::invalid_argument("find_mk_coloring: k must be >= 0");
  ColoringSearch search(g, m, k);
  if (!search.solve(0)) return std::nullopt;
  DefectivePartition p;
  p.m = m;
  p.k = k;
  p.assign = std::move(search.color);
  return p;
}

ChiResult defective_chromatic_number(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("defective_chromatic_number: k must be >= 0");
  ChiResult r;
  r.witness.k = k;
  if (g.order() == 0) return r;  // chi of the null graph is 0
  for (int m = 1;; ++m) {
    if (auto p = find_mk_coloring(g, m, k)) {
      r.chi = m;
      r.witness = std::move(*p);
      return r;
    }
  }
}

int lovasz_bound(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("lovasz_bound: k must be >= 0");
  return 1 + g.max_degree() / (k + 1);
}

namespace {

CriticalityResult criticality_check(const Graph& g, int m, int k, bool edges) {
  if (m < 2) throw std::invalid_argument("criticality requires m >= 2");
  CriticalityResult r;
  if (find_mk_coloring(g, m - 1, k)) return r;  // chi < m
  if (!find_mk_coloring(g, m, k)) return r;     // chi > m
  std::vector<DefectivePartition> witnesses;
  if (edges) {
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v) {
        if (!g.has_edge(u, v)) continue;
        auto p = find_mk_coloring(g.delete_edge(u, v), m - 1, k);
        if (!p) return r;
        witnesses.push_back(std::move(*p));
      }
  } else {
    for (int u = 0; u < g.order(); ++u) {
      auto p = find_mk_coloring(g.delete_vertex(u), m - 1, k);
      if (!p) return r;
      witnesses.push_back(std::move(*p));
    }
  }
  r.critical = true;
  r.witnesses = std::move(witnesses);
  return r;
}

}  // namespace

CriticalityResult is_mk_critical(const Graph& g, int m, int k) {
  return criticality_check(g, m, k, /*edges=*/false);
}

CriticalityResult is_mk_edge_critical(const Graph& g, int m, int k) {
  return criticality_check(g, m, k, /*edges=*/true);
}

}  // namespace kdefect
