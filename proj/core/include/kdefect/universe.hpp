#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "kdefect/graph.hpp"

namespace kdefect {

/// Universe caches are plain sorted .g6 files named tf-<n>.g6 / all-<n>.g6,
/// one canonical record per line, with a sidecar stamp file carrying the
/// cache format version and class count.
struct CacheConfig {
  std::filesystem::path dir;
  bool enabled() const { return !dir.empty(); }
};

inline constexpr int kCacheFormatVersion = 1;

/// Memoizing provider of enumerated universes for the verification checks.
/// Graphs are handed out canonically labeled and sorted by canonical key,
/// so downstream reports are identical whether a universe was enumerated or
/// loaded from a warm cache.
class UniverseStore {
 public:
  explicit UniverseStore(CacheConfig cache = {}, int workers = 1)
      : cache_(std::move(cache)), workers_(workers) {}

  int workers() const { return workers_; }
  const CacheConfig& cache() const { return cache_; }

  /// All triangle-free classes of order n (materialized; intended n <= 10).
  const std::vector<Graph>& triangle_free(int n);

  /// chi_1 for each graph of triangle_free(n), aligned by index.
  const std::vector<int>& chi1(int n);

  /// Indices into triangle_free(n) with chi_1 == 3.
  const std::vector<std::size_t>& chi1_eq3(int n);

  /// Indices into triangle_free(10) that are (3,1)-critical
  /// (resp. (3,1)-edge-critical); computed once over chi1_eq3(10).
  const std::vector<std::size_t>& critical31_order10();
  const std::vector<std::size_t>& edge_critical31_order10();

  /// Streams the triangle-free classes of order n in canonical-key order,
  /// using the cache when possible (enumerates + populates it otherwise).
  /// Supports n <= 12 without materializing the whole universe here.
  std::uint64_t stream_triangle_free(int n, const std::function<void(const Graph&)>& consumer);

 private:
  std::optional<std::vector<Graph>> load_cached(int n) const;
  void store_cache(int n, const std::vector<std::string>& sorted_lines) const;
  std::vector<Graph> enumerate_sorted(int n, bool write_cache);

  CacheConfig cache_;
  int workers_;
  std::mutex mutex_;
  std::map<int, std::vector<Graph>> tf_;
  std::map<int, std::vector<int>> chi1_;
  std::map<int, std::vector<std::size_t>> chi1_eq3_;
  std::optional<std::vector<std::size_t>> critical10_;
  std::optional<std::vector<std::size_t>> edge_critical10_;
};

}  // namespace kdefect
