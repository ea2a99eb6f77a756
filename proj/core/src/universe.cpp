#include "kdefect/universe.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <stdexcept>

#include "internal/parallel.hpp"
#include "kdefect/coloring.hpp"
#include "kdefect/enumerate.hpp"
#include "kdefect/graph6.hpp"
#include "kdefect/iso.hpp"

namespace kdefect {

namespace {

std::filesystem::path cache_file(const CacheConfig& cache, int n) {
  return cache.dir / ("tf-" + std::to_string(n) + ".g6");
}

std::filesystem::path stamp_file(const CacheConfig& cache, int n) {
  return cache.dir / ("tf-" + std::to_string(n) + ".g6.stamp");
}

// Enumerates the triangle-free classes of order n as canonical graph6
// lines, sorted ascending.
std::vector<std::string> enumerate_lines(int n, int workers) {
  std::vector<std::string> lines;
  std::mutex mu;
  EnumerateOptions opts;
  opts.workers = workers;
  enumerate_triangle_free(
      n,
      [&](const Graph& g) {
        std::string line = canonical_form(g).canon_g6;
        std::lock_guard<std::mutex> lock(mu);
        lines.push_back(std::move(line));
      },
      opts);
  std::sort(lines.begin(), lines.end());
  return lines;
}

}  // namespace

std::optional<std::vector<Graph>> UniverseStore::load_cached(int n) const {
  if (!cache_.enabled()) return std::nullopt;
  std::ifstream stamp(stamp_file(cache_, n));
  if (!stamp) return std::nullopt;
  std::string header, filter_line, n_line, classes_line;
  if (!std::getline(stamp, header) || header != "kdefect-cache " + std::to_string(kCacheFormatVersion))
    return std::nullopt;
  if (!std::getline(stamp, filter_line) || filter_line != "filter=triangle-free") return std::nullopt;
  if (!std::getline(stamp, n_line) || n_line != "n=" + std::to_string(n)) return std::nullopt;
  if (!std::getline(stamp, classes_line) || classes_line.rfind("classes=", 0) != 0) return std::nullopt;
  const std::uint64_t expected = std::stoull(classes_line.substr(8));

  std::ifstream in(cache_file(cache_, n));
  if (!in) return std::nullopt;
  std::vector<Graph> graphs;
  std::string line, prev;
  while (std::getline(in, line)) {
    if (line.empty()) return std::nullopt;
    if (!prev.empty() && !(prev < line)) return std::nullopt;  // must be sorted, no dupes
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const Graph6ParseError&) {
      return std::nullopt;
    }
    if (g.order() != n || !g.is_triangle_free()) return std::nullopt;
    graphs.push_back(g);
    prev = std::move(line);
  }
  if (graphs.size() != expected) return std::nullopt;
  return graphs;
}

void UniverseStore::store_cache(int n, const std::vector<std::string>& sorted_lines) const {
  if (!cache_.enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(cache_.dir, ec);
  const auto file = cache_file(cache_, n);
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    for (const auto& line : sorted_lines) out << line << '\n';
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) return;
  std::ofstream stamp(stamp_file(cache_, n));
  stamp << "kdefect-cache " << kCacheFormatVersion << '\n'
        << "filter=triangle-free" << '\n'
        << "n=" << n << '\n'
        << "classes=" << sorted_lines.size() << '\n';
}

std::vector<Graph> UniverseStore::enumerate_sorted(int n, bool write_cache) {
  const auto lines = enumerate_lines(n, workers_);
  if (write_cache) store_cache(n, lines);
  std::vector<Graph> graphs;
  graphs.reserve(lines.size());
  for (const auto& line : lines) graphs.push_back(parse_graph6(line));
  return graphs;
}

const std::vector<Graph>& UniverseStore::triangle_free(int n) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = tf_.find(n);
  if (it != tf_.end()) return it->second;
  if (auto cached = load_cached(n)) return tf_.emplace(n, std::move(*cached)).first->second;
  return tf_.emplace(n, enumerate_sorted(n, /*write_cache=*/true)).first->second;
}

const std::vector<int>& UniverseStore::chi1(int n) {
  const auto& graphs = triangle_free(n);
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = chi1_.find(n);
  if (it != chi1_.end()) return it->second;
  std::vector<int> chi(graphs.size());
  internal::parallel_for(graphs.size(), workers_,
                         [&](std::size_t i) { chi[i] = defective_chromatic_number(graphs[i], 1).chi; });
  return chi1_.emplace(n, std::move(chi)).first->second;
}

const std::vector<std::size_t>& UniverseStore::chi1_eq3(int n) {
  const auto& chi = chi1(n);
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = chi1_eq3_.find(n);
  if (it != chi1_eq3_.end()) return it->second;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < chi.size(); ++i)
    if (chi[i] == 3) idx.push_back(i);
  return chi1_eq3_.emplace(n, std::move(idx)).first->second;
}

const std::vector<std::size_t>& UniverseStore::critical31_order10() {
  const auto& graphs = triangle_free(10);
  const auto& members = chi1_eq3(10);
  std::lock_guard<std::mutex> lock(mutex_);
  if (critical10_) return *critical10_;
  std::vector<char> flag(members.size());
  internal::parallel_for(members.size(), workers_, [&](std::size_t i) {
    flag[i] = is_mk_critical(graphs[members[i]], 3, 1).critical ? 1 : 0;
  });
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (flag[i]) idx.push_back(members[i]);
  critical10_ = std::move(idx);
  return *critical10_;
}

const std::vector<std::size_t>& UniverseStore::edge_critical31_order10() {
  const auto& graphs = triangle_free(10);
  const auto& members = chi1_eq3(10);
  std::lock_guard<std::mutex> lock(mutex_);
  if (edge_critical10_) return *edge_critical10_;
  std::vector<char> flag(members.size());
  internal::parallel_for(members.size(), workers_, [&](std::size_t i) {
    flag[i] = is_mk_edge_critical(graphs[members[i]], 3, 1).critical ? 1 : 0;
  });
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (flag[i]) idx.push_back(members[i]);
  edge_critical10_ = std::move(idx);
  return *edge_critical10_;
}

std::uint64_t UniverseStore::stream_triangle_free(int n,
                                                  const std::function<void(const Graph&)>& consumer) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = tf_.find(n);
    if (it != tf_.end()) {
      for (const auto& g : it->second) consumer(g);
      return it->second.size();
    }
  }
  if (auto cached = load_cached(n)) {
    for (const auto& g : *cached) consumer(g);
    return cached->size();
  }
  const auto lines = enumerate_lines(n, workers_);
  store_cache(n, lines);
  for (const auto& line : lines) consumer(parse_graph6(line));
  return lines.size();
}

}  // namespace kdefect
