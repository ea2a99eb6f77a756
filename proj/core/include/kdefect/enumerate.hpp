#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "kdefect/graph.hpp"

namespace kdefect {

enum class GraphFilter { triangle_free, all };

struct EnumerateOptions {
  int shard_index = 0;  // process only parents with index % shard_count == shard_index
  int shard_count = 1;
  int workers = 1;          // consumer runs concurrently when workers > 1
  bool chi1_histogram = false;
  bool verify_unique = false;  // assert pairwise-distinct canonical keys (memory-heavy)
};

struct EnumerationSummary {
  int n = 0;
  std::uint64_t class_count = 0;
  std::map<int, std::uint64_t> degree_histogram;  // max degree -> classes
  std::map<int, std::uint64_t> chi1_histogram;    // chi_1 -> classes (when requested)
};

/// Calls consumer exactly once per isomorphism class of triangle-free
/// graphs on n vertices (1 <= n <= 12). Generation is by canonical
/// construction path: each (n-1)-vertex representative is extended by one
/// new vertex whose neighborhood is independent in the parent, and a child
/// survives iff its new vertex shares an automorphism orbit with the last
/// vertex of its canonical labeling; residual duplicates are removed per
/// parent via canonical keys.
EnumerationSummary enumerate_triangle_free(int n,
                                           const std::function<void(const Graph&)>& consumer,
                                           const EnumerateOptions& opts = {});

/// Same generation scheme without the triangle-free restriction (all
/// graphs); practical for n <= 8.
EnumerationSummary enumerate_classes(int n, GraphFilter filter,
                                     const std::function<void(const Graph&)>& consumer,
                                     const EnumerateOptions& opts = {});

/// Independent oracle: scans all 2^(n(n-1)/2) labeled graphs (n <= 7),
/// keeps those satisfying the predicate, and returns one representative
/// per isomorphism class (the first encountered in mask order).
std::vector<Graph> brute_force_enumerate(int n, const std::function<bool(const Graph&)>& predicate);

}  // namespace kdefect
