#include <doctest.h>

#include <map>
#include <mutex>
#include <set>

#include "kdefect/catalog.hpp"
#include "kdefect/enumerate.hpp"
#include "kdefect/iso.hpp"
#include "oracles.hpp"

using namespace kdefect;

namespace {

std::set<std::string> collect_keys(int n, const EnumerateOptions& opts = {}) {
  std::set<std::string> keys;
  std::mutex mu;
  enumerate_triangle_free(
      n,
      [&](const Graph& g) {
        auto key = canonical_form(g).canon_g6;
        std::lock_guard<std::mutex> lock(mu);
        keys.insert(std::move(key));
      },
      opts);
  return keys;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("small orders match the labeled brute force, keys included") {
  const auto tf = [](const Graph& g) { return g.is_triangle_free(); };
  const std::map<int, std::size_t> expected = {{1, 1}, {2, 2}, {3, 3}, {4, 7}, {5, 14}, {6, 38}};
  for (auto [n, count] : expected) {
    const auto oracle = brute_force_enumerate(n, tf);
    CHECK(oracle.size() == count);
    std::set<std::string> oracle_keys;
    for (const auto& g : oracle) oracle_keys.insert(canonical_form(g).canon_g6);
    CHECK(collect_keys(n) == oracle_keys);
  }
}

TEST_CASE("order 3 classes are the empty graph, K2+K1 and P3") {
  const std::set<std::string> expected = {
      canonical_form(Graph(3)).canon_g6,
      canonical_form(disjoint_union(complete_graph(2), Graph(1))).canon_g6,
      canonical_form(path_graph(3)).canon_g6};
  CHECK(collect_keys(3) == expected);
}

TEST_CASE("unfiltered generation matches the brute force") {
  const auto all = [](const Graph&) { return true; };
  for (int n = 1; n <= 6; ++n) {
    const auto oracle = brute_force_enumerate(n, all);
    std::set<std::string> oracle_keys, got;
    for (const auto& g : oracle) oracle_keys.insert(canonical_form(g).canon_g6);
    std::mutex mu;
    enumerate_classes(n, GraphFilter::all, [&](const Graph& g) {
      auto key = canonical_form(g).canon_g6;
      std::lock_guard<std::mutex> lock(mu);
      got.insert(std::move(key));
    });
    CHECK(got == oracle_keys);
  }
}

TEST_CASE("no duplicate classes and consumer sees only triangle-free graphs") {
  for (int n : {7, 8, 9}) {
    std::uint64_t emitted = 0;
    bool all_tf = true;
    std::mutex mu;
    EnumerateOptions opts;
    opts.verify_unique = true;  // throws on a duplicate canonical key
    opts.workers = 2;
    const auto summary = enumerate_triangle_free(
        n,
        [&](const Graph& g) {
          std::lock_guard<std::mutex> lock(mu);
          ++emitted;
          all_tf &= g.is_triangle_free() && g.order() == n;
        },
        opts);
    CHECK(all_tf);
    CHECK(summary.class_count == emitted);
  }
}

TEST_CASE("sharded runs partition the class set") {
  const auto whole = collect_keys(8);
  std::set<std::string> merged;
  std::size_t total = 0;
  for (int shard = 0; shard < 3; ++shard) {
    EnumerateOptions opts;
    opts.shard_index = shard;
    opts.shard_count = 3;
    const auto part = collect_keys(8, opts);
    total += part.size();
    for (const auto& k : part) {
      CHECK(!merged.count(k));  // zero cross-shard duplicates
      merged.insert(k);
    }
  }
  CHECK(total == whole.size());
  CHECK(merged == whole);
}

TEST_CASE("worker count does not change the class set") {
  EnumerateOptions two;
  two.workers = 2;
  CHECK(collect_keys(8, two) == collect_keys(8));
}

TEST_CASE("order-9 histogram finds the four chi_1 = 3 classes") {
  EnumerateOptions opts;
  opts.chi1_histogram = true;
  opts.workers = 2;
  const auto summary = enumerate_triangle_free(9, [](const Graph&) {}, opts);
  CHECK(summary.class_count == 1897);
  CHECK(summary.chi1_histogram.at(3) == 4);
  CHECK(summary.chi1_histogram.count(4) == 0);
  std::uint64_t histo_total = 0;
  for (auto [chi, c] : summary.chi1_histogram) histo_total += c;
  CHECK(histo_total == summary.class_count);
}

TEST_CASE("range and shard validation") {
  CHECK_THROWS_AS(enumerate_triangle_free(0, [](const Graph&) {}), std::out_of_range);
  CHECK_THROWS_AS(enumerate_triangle_free(13, [](const Graph&) {}), std::out_of_range);
  CHECK_THROWS_AS(brute_force_enumerate(8, [](const Graph&) { return true; }), std::out_of_range);
  EnumerateOptions bad;
  bad.shard_index = 3;
  bad.shard_count = 3;
  CHECK_THROWS_AS(enumerate_triangle_free(5, [](const Graph&) {}, bad), std::invalid_argument);
}

TEST_CASE("brute force enumerates all four order-3 graphs") {
  CHECK(brute_force_enumerate(3, [](const Graph&) { return true; }).size() == 4);
}

}  // TEST_SUITE
