#include "kdefect/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "kdefect/coloring.hpp"
#include "kdefect/iso.hpp"

namespace kdefect {

namespace {

using detail::Canon;
using detail::CanonKey;
using detail::CanonKeyHash;

struct KeyedGraph {
  CanonKey key;
  Graph graph;
};

// Extends one parent by a new last vertex, one child per attachment
// neighborhood surviving the canonical parent rule. In triangle-free mode
// the neighborhood must be independent in the parent, which is exactly the
// condition that the child stays triangle-free.
template <typename Emit>
void extend_parent(const Graph& parent, GraphFilter filter, Emit&& emit) {
  const int pn = parent.order();
  const int cn = pn + 1;
  std::uint64_t rows[17];
  for (int v = 0; v < pn; ++v) rows[v] = parent.row(v);
  rows[pn] = 0;

  std::unordered_set<CanonKey, CanonKeyHash> seen;  // per-parent residue dedup

  auto try_child = [&](std::uint64_t nbhd) {
    for (int v = 0; v < pn; ++v)
      rows[v] = (parent.row(v) & ~(std::uint64_t{1} << pn)) |
                (((nbhd >> v) & 1) << pn);
    rows[pn] = nbhd;
    const Graph child = Graph::from_rows(cn, std::span<const std::uint64_t>(rows, cn));
    const Canon canon = detail::canonicalize(child);
    // The acceptance test depends on the labeled child (which neighborhood
    // produced it), so it must run before the per-parent class dedup: a
    // rejected copy of a class must not shadow an acceptable one.
    if (!canon.same_orbit(pn, canon.canon_last())) return;
    if (seen.insert(canon.key()).second) emit(child, canon.key());
  };

  if (filter == GraphFilter::triangle_free) {
    // DFS over independent sets of the parent, ascending vertex order.
    auto rec = [&](auto&& self, std::uint64_t chosen, std::uint64_t cands) -> void {
      try_child(chosen);
      while (cands) {
        const int v = std::countr_zero(cands);
        cands &= cands - 1;
        self(self, chosen | (std::uint64_t{1} << v), cands & ~parent.row(v));
      }
    };
    rec(rec, 0, VertexSet::range(pn).bits());
  } else {
    const std::uint64_t limit = std::uint64_t{1} << pn;
    for (std::uint64_t nbhd = 0; nbhd < limit; ++nbhd) try_child(nbhd);
  }
}

std::vector<KeyedGraph> extend_level(const std::vector<Graph>& parents, GraphFilter filter,
                                     int workers) {
  std::vector<std::vector<KeyedGraph>> partial(std::max(workers, 1));
  auto work = [&](int w) {
    for (std::size_t i = w; i < parents.size(); i += workers)
      extend_parent(parents[i], filter,
                    [&](const Graph& g, const CanonKey& key) { partial[w].push_back({key, g}); });
  };
  if (workers <= 1) {
    workers = 1;
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<KeyedGraph> out;
  for (auto& p : partial) {
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    p.clear();
  }
  std::sort(out.begin(), out.end(), [](const KeyedGraph& a, const KeyedGraph& b) { return a.key < b.key; });
  return out;
}

}  // namespace

EnumerationSummary enumerate_classes(int n, GraphFilter filter,
                                     const std::function<void(const Graph&)>& consumer,
                                     const EnumerateOptions& opts) {
  const int max_n = filter == GraphFilter::triangle_free ? 12 : 8;
  if (n < 1 || n > max_n)
    throw std::out_of_range("enumeration supports 1 <= n <= " + std::to_string(max_n) +
                            " for this filter, got " + std::to_string(n));
  if (opts.shard_count < 1 || opts.shard_index < 0 || opts.shard_index >= opts.shard_count)
    throw std::invalid_argument("invalid shard spec");
  const int workers = std::max(opts.workers, 1);

  EnumerationSummary summary;
  summary.n = n;

  std::mutex agg_mutex;
  std::unordered_set<CanonKey, CanonKeyHash> unique_keys;
  auto record = [&](const Graph& g, const CanonKey& key) {
    std::map<int, std::uint64_t> dh, ch;
    dh[g.max_degree()] = 1;
    if (opts.chi1_histogram) ch[defective_chromatic_number(g, 1).chi] = 1;
    {
      std::lock_guard<std::mutex> lock(agg_mutex);
      ++summary.class_count;
      for (auto [kk, vv] : dh) summary.degree_histogram[kk] += vv;
      for (auto [kk, vv] : ch) summary.chi1_histogram[kk] += vv;
      if (opts.verify_unique && !unique_keys.insert(key).second)
        throw std::logic_error("duplicate canonical key emitted by enumeration");
    }
    consumer(g);
  };

  if (n == 1) {
    if (opts.shard_index == 0) record(Graph(1), detail::canonical_key(Graph(1)));
    return summary;
  }

  // build representatives of order n-1, sorted by canonical key
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n - 1; ++k) {
    auto next = extend_level(level, filter, workers);
    level.clear();
    level.reserve(next.size());
    for (auto& kg : next) level.push_back(std::move(kg.graph));
  }

  // final level: shard by parent index, emit children
  auto final_work = [&](int w) {
    for (std::size_t i = w; i < level.size(); i += workers) {
      if (static_cast<int>(i % opts.shard_count) != opts.shard_index) continue;
      extend_parent(level[i], filter, record);
    }
  };
  if (workers == 1) {
    final_work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(final_work, w);
    for (auto& t : pool) t.join();
  }
  return summary;
}

EnumerationSummary enumerate_triangle_free(int n,
                                           const std::function<void(const Graph&)>& consumer,
                                           const EnumerateOptions& opts) {
  return enumerate_classes(n, GraphFilter::triangle_free, consumer, opts);
}

std::vector<Graph> brute_force_enumerate(int n,
                                         const std::function<bool(const Graph&)>& predicate) {
  if (n < 1 || n > 7)
    throw std::out_of_range("brute_force_enumerate supports 1 <= n <= 7, got " + std::to_string(n));
  const int nbits = n * (n - 1) / 2;
  std::vector<Graph> reps;
  std::unordered_set<CanonKey, CanonKeyHash> seen;
  // mask bit order matches the graph6 upper-triangle column order
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nbits); ++mask) {
    std::uint64_t rows[7] = {};
    for (int b = 0; b < nbits; ++b) {
      if (!((mask >> b) & 1)) continue;
      auto [i, j] = pairs[b];
      rows[i] |= std::uint64_t{1} << j;
      rows[j] |= std::uint64_t{1} << i;
    }
    const Graph g = Graph::from_rows(n, std::span<const std::uint64_t>(rows, n));
    if (!predicate(g)) continue;
    if (seen.insert(detail::canonical_key(g)).second) reps.push_back(g);
  }
  return reps;
}

}  // namespace kdefect
