#include "kdefect/iso.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

#include "kdefect/graph6.hpp"

namespace kdefect {
namespace detail {

std::strong_ordering AdjBits::cmp_prefix(const AdjBits& a, const AdjBits& b, int nbits) {
  if (nbits <= 0) return std::strong_ordering::equal;
  if (nbits >= 120) return a <=> b;
  if (nbits <= 64) {
    const std::uint64_t mask = ~std::uint64_t{0} << (64 - nbits);
    return (a.w0 & mask) <=> (b.w0 & mask);
  }
  if (a.w0 != b.w0) return a.w0 <=> b.w0;
  const std::uint64_t mask = ~std::uint64_t{0} << (128 - nbits);
  return (a.w1 & mask) <=> (b.w1 & mask);
}

namespace {

using Perm = std::array<std::uint8_t, 16>;

// Individualization-refinement search for the canonical labeling. The
// canonical string is the lexicographic minimum of the relabeled adjacency
// string over all completed branches. Automorphisms discovered from
// equal-string leaves prune sibling branches (restricted to generators
// fixing the individualized prefix pointwise) and yield the orbit
// partition.
struct Searcher {
  int n = 0;
  std::array<std::uint16_t, 16> adj{};

  bool have_leaf = false;
  AdjBits first_bits, best_bits;
  Perm first_pos{}, best_pos{};  // canonical position -> vertex

  std::vector<Perm> gens;
  std::array<std::uint8_t, 16> ind_path{};
  int ind_depth = 0;

  struct Node {
    Perm pos{};                  // position -> vertex
    std::uint32_t cell_end = 0;  // bit p set: a cell ends at position p
  };

  void add_generator(const Perm& gamma) {
    for (const auto& g0 : gens)
      if (std::equal(g0.begin(), g0.begin() + n, gamma.begin())) return;
    gens.push_back(gamma);
  }

  Perm leaf_automorphism(const Perm& ref_pos, const Perm& cur_pos) const {
    Perm gamma{};
    for (int i = 0; i < n; ++i) gamma[cur_pos[i]] = ref_pos[i];
    return gamma;
  }

  // Orbits of the subgroup generated by collected automorphisms that fix
  // the first `depth` individualized vertices pointwise. root[v] is the
  // minimum vertex of v's orbit.
  void stabilized_orbits(int depth, std::uint8_t* root) const {
    for (int v = 0; v < n; ++v) root[v] = static_cast<std::uint8_t>(v);
    auto find = [&](int v) {
      while (root[v] != v) v = root[v] = root[root[v]];
      return v;
    };
    for (const auto& g0 : gens) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = g0[ind_path[i]] == ind_path[i];
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) {
        int a = find(v), b = find(g0[v]);
        if (a != b) root[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
      }
    }
    for (int v = 0; v < n; ++v) root[v] = static_cast<std::uint8_t>(find(v));
  }

  void refine(Node& nd, std::uint32_t work) const {
    while (work) {
      const int s = std::countr_zero(work);
      work &= work - 1;
      if (s >= n) continue;
      int e = s;
      while (!((nd.cell_end >> e) & 1)) ++e;
      std::uint16_t splitter = 0;
      for (int p = s; p <= e; ++p) splitter |= static_cast<std::uint16_t>(1u << nd.pos[p]);

      for (int cs = 0; cs < n;) {
        int ce = cs;
        while (!((nd.cell_end >> ce) & 1)) ++ce;
        if (ce > cs) {
          int cnt[16];
          int mn = 17, mx = -1;
          for (int p = cs; p <= ce; ++p) {
            cnt[p - cs] = std::popcount(static_cast<std::uint16_t>(adj[nd.pos[p]] & splitter));
            mn = std::min(mn, cnt[p - cs]);
            mx = std::max(mx, cnt[p - cs]);
          }
          if (mn != mx) {
            // stable counting sort of the cell by count, ascending
            const int len = ce - cs + 1;
            std::uint8_t tmp[16];
            int bucket[17] = {};
            for (int i = 0; i < len; ++i) ++bucket[cnt[i]];
            int pfx[17];
            int acc = 0;
            for (int c = 0; c <= 16; ++c) {
              pfx[c] = acc;
              acc += bucket[c];
            }
            for (int i = 0; i < len; ++i) tmp[pfx[cnt[i]]++] = nd.pos[cs + i];
            for (int i = 0; i < len; ++i) nd.pos[cs + i] = tmp[i];
            int at = cs;
            for (int c = 0; c <= 16; ++c) {
              if (!bucket[c]) continue;
              work |= std::uint32_t{1} << at;  // queue every fragment
              at += bucket[c];
              nd.cell_end |= std::uint32_t{1} << (at - 1);
            }
          }
        }
        cs = ce + 1;
      }
    }
  }

  AdjBits partial_bits(const Node& nd, int t) const {
    AdjBits b;
    int idx = 0;
    for (int j = 1; j < t; ++j) {
      const std::uint16_t rowj = adj[nd.pos[j]];
      for (int i = 0; i < j; ++i, ++idx)
        if ((rowj >> nd.pos[i]) & 1) b.set(idx);
    }
    return b;
  }

  void leaf(const Node& nd) {
    const AdjBits bits = partial_bits(nd, n);
    if (!have_leaf) {
      have_leaf = true;
      first_bits = best_bits = bits;
      first_pos = best_pos = nd.pos;
      return;
    }
    if (bits == first_bits) add_generator(leaf_automorphism(first_pos, nd.pos));
    if (bits < best_bits) {
      best_bits = bits;
      best_pos = nd.pos;
    } else if (bits == best_bits) {
      add_generator(leaf_automorphism(best_pos, nd.pos));
    }
  }

  void descend(Node nd, std::uint32_t seed) {
    refine(nd, seed);
    const int t = std::countr_one(nd.cell_end);
    if (have_leaf) {
      const AdjBits partial = partial_bits(nd, t);
      const int nbits = t * (t - 1) / 2;
      const auto cb = AdjBits::cmp_prefix(partial, best_bits, nbits);
      if (cb == std::strong_ordering::greater &&
          AdjBits::cmp_prefix(partial, first_bits, nbits) != std::strong_ordering::equal)
        return;
    }
    if (t == n) {
      leaf(nd);
      return;
    }

    // target: first largest non-singleton cell
    int bs = -1, blen = 0;
    for (int cs = 0; cs < n;) {
      int ce = cs;
      while (!((nd.cell_end >> ce) & 1)) ++ce;
      if (ce > cs && ce - cs + 1 > blen) {
        bs = cs;
        blen = ce - cs + 1;
      }
      cs = ce + 1;
    }
    assert(bs >= 0);

    std::uint8_t cand[16];
    for (int i = 0; i < blen; ++i) cand[i] = nd.pos[bs + i];
    std::sort(cand, cand + blen);

    std::uint8_t done[16];
    int ndone = 0;
    std::uint8_t root[16];
    for (int ci = 0; ci < blen; ++ci) {
      const int v = cand[ci];
      if (ndone) {
        stabilized_orbits(ind_depth, root);
        bool skip = false;
        for (int di = 0; di < ndone && !skip; ++di) skip = root[done[di]] == root[v];
        if (skip) continue;
      }
      Node child = nd;
      int vp = bs;
      while (child.pos[vp] != v) ++vp;
      for (int p = vp; p > bs; --p) child.pos[p] = child.pos[p - 1];
      child.pos[bs] = static_cast<std::uint8_t>(v);
      child.cell_end |= std::uint32_t{1} << bs;
      ind_path[ind_depth++] = static_cast<std::uint8_t>(v);
      descend(child, std::uint32_t{1} << bs);
      --ind_depth;
      done[ndone++] = static_cast<std::uint8_t>(v);
    }
  }

  Canon run(const Graph& g, std::span<const VertexSet> cells) {
    n = g.order();
    Canon out;
    out.n = n;
    if (n == 0) return out;
    for (int v = 0; v < n; ++v) adj[v] = static_cast<std::uint16_t>(g.row(v));

    Node rootnode{};
    std::uint32_t starts = 0;
    if (cells.empty()) {
      for (int v = 0; v < n; ++v) rootnode.pos[v] = static_cast<std::uint8_t>(v);
      rootnode.cell_end = std::uint32_t{1} << (n - 1);
      starts = 1;
    } else {
      VertexSet seen;
      int at = 0;
      for (const auto& c : cells) {
        if (c.empty()) continue;
        if (!(c & seen).empty() || !c.subset_of(VertexSet::range(n)))
          throw std::invalid_argument("initial partition cells must be disjoint subsets of V");
        seen = seen | c;
        starts |= std::uint32_t{1} << at;
        for (int v : c) rootnode.pos[at++] = static_cast<std::uint8_t>(v);
        rootnode.cell_end |= std::uint32_t{1} << (at - 1);
      }
      if (at != n) throw std::invalid_argument("initial partition must cover all vertices");
    }

    descend(rootnode, starts);
    assert(have_leaf);

    out.bits = best_bits;
    out.inv = best_pos;
    for (int i = 0; i < n; ++i) out.perm[best_pos[i]] = static_cast<std::uint8_t>(i);
    std::uint8_t root[16];
    stabilized_orbits(0, root);
    for (int v = 0; v < n; ++v) out.orbit[v] = root[v];
    return out;
  }
};

void check_canon_order(const Graph& g) {
  if (g.order() > 16)
    throw std::invalid_argument("canonical labeling supports order <= 16, got " +
                                std::to_string(g.order()));
}

}  // namespace

Canon canonicalize(const Graph& g) {
  check_canon_order(g);
  Searcher s;
  return s.run(g, {});
}

Canon canonicalize_colored(const Graph& g, std::span<const VertexSet> cells) {
  check_canon_order(g);
  Searcher s;
  return s.run(g, cells);
}

bool same_orbit_exact(const Graph& g, int a, int b) {
  if (a == b) return true;
  const VertexSet all = VertexSet::range(g.order());
  const std::array<VertexSet, 2> ca{VertexSet::single(a), all - VertexSet::single(a)};
  const std::array<VertexSet, 2> cb{VertexSet::single(b), all - VertexSet::single(b)};
  return canonicalize_colored(g, ca).bits == canonicalize_colored(g, cb).bits;
}

CanonKey canonical_key(const Graph& g) { return canonicalize(g).key(); }

}  // namespace detail

Graph apply_permutation(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation size must equal graph order");
  std::uint64_t seen = 0;
  for (int v = 0; v < n; ++v) {
    if (perm[v] < 0 || perm[v] >= n || (seen >> perm[v]) & 1)
      throw std::invalid_argument("not a permutation of 0..n-1");
    seen |= std::uint64_t{1} << perm[v];
  }
  std::uint64_t rows[Graph::kMaxOrder] = {};
  for (int v = 0; v < n; ++v)
    for (int u : g.neighborhood(v)) rows[perm[v]] |= std::uint64_t{1} << perm[u];
  return Graph::from_rows(n, std::span<const std::uint64_t>(rows, static_cast<std::size_t>(n)));
}

CanonicalForm canonical_form(const Graph& g) {
  const auto canon = detail::canonicalize(g);
  CanonicalForm out;
  out.perm.resize(g.order());
  for (int v = 0; v < g.order(); ++v) out.perm[v] = canon.perm[v];
  out.canon_g6 = write_graph6(apply_permutation(g, out.perm));
  return out;
}

std::optional<VertexMap> are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return std::nullopt;
  const int n = g.order();
  if (n == 0) return VertexMap{};
  detail::check_canon_order(g);
  const auto cg = detail::canonicalize(g);
  const auto ch = detail::canonicalize(h);
  if (cg.bits != ch.bits) return std::nullopt;
  VertexMap map(n);
  for (int v = 0; v < n; ++v) map[v] = ch.inv[cg.perm[v]];
  for (int v = 0; v < n; ++v)
    for (int u = v + 1; u < n; ++u)
      if (g.has_edge(u, v) != h.has_edge(map[u], map[v]))
        throw std::logic_error("isomorphism map failed edge validation");
  return map;
}

std::optional<std::pair<int, VertexMap>> contains_vertex_deleted_copy(const Graph& g,
                                                                      const Graph& h) {
  if (g.order() != h.order() + 1)
    throw std::invalid_argument("contains_vertex_deleted_copy: |V(g)| must equal |V(h)| + 1");
  const auto hkey = detail::canonical_key(h);
  for (int u = 0; u < g.order(); ++u) {
    const Graph del = g.delete_vertex(u);
    if (detail::canonical_key(del) != hkey) continue;
    auto map = are_isomorphic(del, h);
    assert(map.has_value());
    return std::make_pair(u, std::move(*map));
  }
  return std::nullopt;
}

}  // namespace kdefect
