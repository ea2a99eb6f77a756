#include "kdefect/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "internal/parallel.hpp"
#include "kdefect/catalog.hpp"
#include "kdefect/coloring.hpp"
#include "kdefect/graph6.hpp"
#include "kdefect/iso.hpp"

namespace kdefect {

namespace {

using nlohmann::ordered_json;

std::string g6(const Graph& g) { return write_graph6(g); }

ordered_json map_json(const VertexMap& map) {
  auto a = ordered_json::array();
  for (int v : map) a.push_back(v);
  return a;
}

std::vector<int> max_degree_vertices(const Graph& g) {
  const int d = g.max_degree();
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == d) out.push_back(v);
  return out;
}

// H = G[B] with B = V(G) - N[u].
Graph decomposition_h(const Graph& g, int u) {
  return g.induced_subgraph(g.vertices() - g.closed_neighborhood(u));
}

// Least u* (and least catalog index) with g - u* isomorphic to one of the
// targets; the map is validated by are_isomorphic.
std::optional<std::tuple<int, int, VertexMap>> find_deleted_copy(
    const Graph& g, const std::vector<Graph>& targets) {
  std::vector<detail::CanonKey> keys;
  keys.reserve(targets.size());
  for (const auto& t : targets) keys.push_back(detail::canonical_key(t));
  for (int u = 0; u < g.order(); ++u) {
    const Graph del = g.delete_vertex(u);
    const auto key = detail::canonical_key(del);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (key != keys[i]) continue;
      auto map = are_isomorphic(del, targets[i]);
      return std::make_tuple(u, static_cast<int>(i), std::move(*map));
    }
  }
  return std::nullopt;
}

std::vector<Graph> order9_targets() {
  return {catalog_graph("G1"), catalog_graph("G2"), catalog_graph("G3"), catalog_graph("G4")};
}

void sort_counterexamples(std::vector<Counterexample>& cex) {
  std::sort(cex.begin(), cex.end(), [](const Counterexample& a, const Counterexample& b) {
    return std::tie(a.g6, a.reason) < std::tie(b.g6, b.reason);
  });
}

}  // namespace

VerificationReport verify_colorable_sweep(std::string check_id, int n_lo, int n_hi, int m, int k,
                                          UniverseStore& store) {
  Stopwatch timer;
  VerificationReport report;
  report.check_id = std::move(check_id);
  report.universe = {{"n", std::to_string(n_lo) + ".." + std::to_string(n_hi)},
                     {"filter", "triangle-free"},
                     {"hypothesis", "all classes"}};
  report.certificates = ordered_json::array();

  std::vector<Counterexample> cex;
  auto sizes = ordered_json::array();
  for (int n = n_lo; n <= n_hi; ++n) {
    std::uint64_t count = 0;
    int sampled = 0;
    auto samples = ordered_json::array();
    // chunked streaming so that n = 11, 12 never materialize fully
    std::vector<Graph> chunk;
    constexpr std::size_t kChunk = 4096;
    std::vector<std::string> fail;
    auto flush = [&](bool final_flush) {
      if (chunk.empty() || (!final_flush && chunk.size() < kChunk)) return;
      std::vector<std::optional<DefectivePartition>> results(chunk.size());
      internal::parallel_for(chunk.size(), store.workers(),
                             [&](std::size_t i) { results[i] = find_mk_coloring(chunk[i], m, k); });
      for (std::size_t i = 0; i < chunk.size(); ++i) {
        if (!results[i]) {
          fail.push_back(g6(chunk[i]));
        } else {
          if (!results[i]->valid_for(chunk[i]))
            throw std::logic_error("witness partition failed re-validation");
          if (sampled < 3) {
            samples.push_back({{"g6", g6(chunk[i])}, {"witness", results[i]->to_string()}});
            ++sampled;
          }
        }
      }
      chunk.clear();
    };
    count = store.stream_triangle_free(n, [&](const Graph& g) {
      chunk.push_back(g);
      flush(false);
    });
    flush(true);
    for (auto& f : fail)
      cex.push_back({std::move(f), "no (" + std::to_string(m) + "," + std::to_string(k) +
                                       ")-coloring exists (n=" + std::to_string(n) + ")"});
    sizes.push_back({{"n", n}, {"classes", count}, {"witness_samples", samples}});
    report.universe_size += count;
  }
  report.certificates = sizes;
  sort_counterexamples(cex);
  report.finish(std::move(cex));
  report.wall_time_ms = timer.ms();
  return report;
}

VerificationReport verify_small_orders_colorable(UniverseStore& store) {
  auto report = verify_colorable_sweep("small-orders", 1, 8, 2, 1, store);
  report.universe["hypothesis"] = "every triangle-free graph with n <= 8 has chi_1 <= 2";
  return report;
}

VerificationReport verify_order9_classification(UniverseStore& store) {
  Stopwatch timer;
  VerificationReport report;
  report.check_id = "order9";
  report.universe = {{"n", 9},
                     {"filter", "triangle-free"},
                     {"hypothesis", "chi_1(G) = 3"}};

  const auto& tf9 = store.triangle_free(9);
  const auto& members = store.chi1_eq3(9);
  report.universe_size = tf9.size();

  std::vector<Counterexample> cex;
  if (members.size() != 4)
    cex.push_back({"", "expected exactly 4 classes with chi_1 = 3, found " +
                           std::to_string(members.size())});

  const auto targets = order9_targets();
  std::map<std::string, std::string> catalog_key;  // canon g6 -> name
  for (std::size_t i = 0; i < targets.size(); ++i)
    catalog_key[canonical_form(targets[i]).canon_g6] = "G" + std::to_string(i + 1);

  std::set<std::string> expected_edge_critical = {"G1", "G4"};
  auto certs = ordered_json::array();
  for (auto idx : members) {
    const Graph& g = tf9[idx];
    const std::string key = g6(g);  // graphs are canonically labeled
    auto it = catalog_key.find(key);
    if (it == catalog_key.end()) {
      cex.push_back({key, "enumerated chi_1=3 class does not match any catalog G_i"});
      continue;
    }
    const auto crit = is_mk_critical(g, 3, 1);
    if (!crit.critical) {
      cex.push_back({key, it->second + " is not (3,1)-critical"});
      continue;
    }
    // per-vertex (2,1)-witnesses re-validate independently
    auto witnesses = ordered_json::array();
    for (int u = 0; u < g.order(); ++u) {
      if (!crit.witnesses[u].valid_for(g.delete_vertex(u)))
        throw std::logic_error("criticality witness failed re-validation");
      witnesses.push_back(crit.witnesses[u].to_string());
    }
    const bool edge_critical = is_mk_edge_critical(g, 3, 1).critical;
    const bool expect_edge = expected_edge_critical.count(it->second) > 0;
    if (edge_critical != expect_edge)
      cex.push_back({key, it->second + ": (3,1)-edge-criticality is " +
                              (edge_critical ? "true" : "false") + ", expected " +
                              (expect_edge ? "true" : "false")});
    certs.push_back({{"g6", key},
                     {"catalog_name", it->second},
                     {"critical_3_1", true},
                     {"edge_critical_3_1", edge_critical},
                     {"vertex_deletion_witnesses", witnesses}});
  }
  report.certificates = certs;
  sort_counterexamples(cex);
  report.finish(std::move(cex));
  report.wall_time_ms = timer.ms();
  return report;
}

VerificationReport verify_order10_characterization(UniverseStore& store) {
  Stopwatch timer;
  VerificationReport report;
  report.check_id = "order10";
  report.universe = {{"n", 10},
                     {"filter", "triangle-free"},
                     {"hypothesis", "chi_1(G) = 3"}};

  const auto& tf10 = store.triangle_free(10);
  const auto& chi = store.chi1(10);
  const auto& members = store.chi1_eq3(10);
  report.universe_size = tf10.size();

  std::vector<Counterexample> cex;
  // converse bookkeeping: no order-10 triangle-free graph reaches chi_1 >= 4
  std::uint64_t above3 = 0;
  for (std::size_t i = 0; i < chi.size(); ++i)
    if (chi[i] >= 4) {
      ++above3;
      cex.push_back({g6(tf10[i]), "chi_1 = " + std::to_string(chi[i]) + " >= 4"});
    }

  const auto targets = order9_targets();
  const auto g5key = canonical_form(catalog_graph("G5")).canon_g6;

  struct Row {
    std::string key;
    bool is_g5 = false;
    std::optional<std::tuple<int, int, VertexMap>> deleted;
  };
  std::vector<Row> rows(members.size());
  internal::parallel_for(members.size(), store.workers(), [&](std::size_t i) {
    const Graph& g = tf10[members[i]];
    Row row;
    row.key = g6(g);
    row.is_g5 = row.key == g5key;
    row.deleted = find_deleted_copy(g, targets);
    rows[i] = std::move(row);
  });

  std::uint64_t census_g5 = 0, census_deleted = 0;
  auto certs = ordered_json::array();
  for (const auto& row : rows) {
    if (!row.is_g5 && !row.deleted) {
      cex.push_back({row.key, "neither isomorphic to G5 nor contains a vertex-deleted G_i"});
      continue;
    }
    ordered_json c;
    c["g6"] = row.key;
    if (row.is_g5) {
      ++census_g5;
      c["branch"] = "isomorphic_to_G5";
      // criticality of G5 forbids any vertex-deleted copy of a G_i
      c["has_deleted_Gi_copy"] = row.deleted.has_value();
      if (row.deleted)
        cex.push_back({row.key, "isomorphic to G5 yet contains a vertex-deleted G_i copy"});
    } else {
      ++census_deleted;
      const auto& [ustar, i, map] = *row.deleted;
      c["branch"] = "vertex_deleted_copy";
      c["u_star"] = ustar;
      c["target"] = "G" + std::to_string(i + 1);
      c["map"] = map_json(map);
    }
    certs.push_back(std::move(c));
  }

  ordered_json summary;
  summary["members_chi1_eq_3"] = members.size();
  summary["classes_chi1_ge_4"] = above3;
  summary["branch_isomorphic_to_G5"] = census_g5;
  summary["branch_vertex_deleted_copy"] = census_deleted;
  report.certificates = ordered_json::array({summary});
  for (auto& c : certs) report.certificates.push_back(std::move(c));

  sort_counterexamples(cex);
  report.finish(std::move(cex));
  report.wall_time_ms = timer.ms();
  return report;
}

VerificationReport verify_critical_and_edge_critical_order10(UniverseStore& store) {
  Stopwatch timer;
  VerificationReport report;
  report.check_id = "critical10";
  report.universe = {{"n", 10},
                     {"filter", "triangle-free"},
                     {"hypothesis", "chi_1(G) = 3, criticality scans over all members"}};

  const auto& tf10 = store.triangle_free(10);
  report.universe_size = tf10.size();

  std::vector<Counterexample> cex;

  std::set<std::string> critical_keys, edge_critical_keys;
  for (auto idx : store.critical31_order10()) critical_keys.insert(g6(tf10[idx]));
  for (auto idx : store.edge_critical31_order10()) edge_critical_keys.insert(g6(tf10[idx]));

  const std::set<std::string> expected_critical = {canonical_form(catalog_graph("G5")).canon_g6};
  const std::set<std::string> expected_edge_critical = {
      canonical_form(catalog_graph("G5")).canon_g6,
      canonical_form(catalog_graph("G1uK1")).canon_g6,
      canonical_form(catalog_graph("G4uK1")).canon_g6};

  for (const auto& k : critical_keys)
    if (!expected_critical.count(k)) cex.push_back({k, "(3,1)-critical but not isomorphic to G5"});
  for (const auto& k : expected_critical)
    if (!critical_keys.count(k)) cex.push_back({k, "expected (3,1)-critical class not found"});
  for (const auto& k : edge_critical_keys)
    if (!expected_edge_critical.count(k))
      cex.push_back({k, "(3,1)-edge-critical but not in {G5, G1uK1, G4uK1}"});
  for (const auto& k : expected_edge_critical)
    if (!edge_critical_keys.count(k)) cex.push_back({k, "expected (3,1)-edge-critical class not found"});

  // edge-critical with no isolated vertices implies critical on this universe
  for (const auto& k : edge_critical_keys) {
    const Graph g = parse_graph6(k);
    bool isolated = false;
    for (int v = 0; v < g.order(); ++v) isolated |= g.degree(v) == 0;
    if (!isolated && !critical_keys.count(k))
      cex.push_back({k, "edge-critical without isolated vertices but not critical"});
  }

  ordered_json summary;
  {
    auto arr = ordered_json::array();
    for (const auto& k : critical_keys) arr.push_back(k);
    summary["critical_classes"] = arr;
  }
  {
    auto arr = ordered_json::array();
    for (const auto& k : edge_critical_keys) arr.push_back(k);
    summary["edge_critical_classes"] = arr;
  }
  // per-edge witnesses for the edge-critical classes re-validate independently
  auto witness_certs = ordered_json::array();
  for (const auto& k : edge_critical_keys) {
    const Graph g = parse_graph6(k);
    const auto r = is_mk_edge_critical(g, 3, 1);
    auto witnesses = ordered_json::array();
    std::size_t w = 0;
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v) {
        if (!g.has_edge(u, v)) continue;
        if (!r.witnesses[w].valid_for(g.delete_edge(u, v)))
          throw std::logic_error("edge-criticality witness failed re-validation");
        witnesses.push_back({{"edge", ordered_json::array({u, v})},
                             {"witness", r.witnesses[w].to_string()}});
        ++w;
      }
    witness_certs.push_back({{"g6", k}, {"edge_deletion_witnesses", witnesses}});
  }
  report.certificates = ordered_json::array({summary});
  for (auto& c : witness_certs) report.certificates.push_back(std::move(c));

  sort_counterexamples(cex);
  report.finish(std::move(cex));
  report.wall_time_ms = timer.ms();
  return report;
}

namespace {

struct ShapeKeys {
  detail::CanonKey p3_2k1, p3_k2, p4_k1, p5, c5, c4_k1;
};

ShapeKeys shape_keys() {
  ShapeKeys k;
  k.p3_2k1 = detail::canonical_key(disjoint_union(path_graph(3), Graph(2)));
  k.p3_k2 = detail::canonical_key(disjoint_union(path_graph(3), complete_graph(2)));
  k.p4_k1 = detail::canonical_key(disjoint_union(path_graph(4), Graph(1)));
  k.p5 = detail::canonical_key(path_graph(5));
  k.c5 = detail::canonical_key(cycle_graph(5));
  k.c4_k1 = detail::canonical_key(disjoint_union(cycle_graph(4), Graph(1)));
  return k;
}

bool some_h_shape(const Graph& g, const std::vector<detail::CanonKey>& shapes) {
  for (int u : max_degree_vertices(g)) {
    const auto key = detail::canonical_key(decomposition_h(g, u));
    for (const auto& s : shapes)
      if (key == s) return true;
  }
  return false;
}

bool some_h_degree_in(const Graph& g, int lo, int hi) {
  for (int u : max_degree_vertices(g)) {
    const int d = decomposition_h(g, u).max_degree();
    if (d >= lo && d <= hi) return true;
  }
  return false;
}

// Hypothesis of the Delta(G)=5 first case: some maximum-degree u and some
// z in B of maximum H-degree have |N(u) ∩ N_G(z)| = 3.
bool some_az_eq3(const Graph& g) {
  for (int u : max_degree_vertices(g)) {
    const VertexSet a = g.neighborhood(u);
    const VertexSet b = g.vertices() - g.closed_neighborhood(u);
    const Graph h = g.induced_subgraph(b);
    const int hmax = h.max_degree();
    std::vector<int> bverts;
    for (int v : b) bverts.push_back(v);
    for (int zi = 0; zi < h.order(); ++zi) {
      if (h.degree(zi) != hmax) continue;
      const int z = bverts[zi];
      if ((a & g.neighborhood(z)).count() == 3) return true;
    }
  }
  return false;
}

}  // namespace

VerificationReport verify_structural_lemma(int lemma_id, UniverseStore& store) {
  if (lemma_id < 4 || lemma_id > 13)
    throw std::invalid_argument("lemma id must be in 4..13, got " + std::to_string(lemma_id));

  Stopwatch timer;
  VerificationReport report;
  report.check_id = "lemma" + std::to_string(lemma_id);
  const auto& tf10 = store.triangle_free(10);
  const auto& chi = store.chi1(10);
  const auto& members = store.chi1_eq3(10);
  report.universe_size = tf10.size();

  const auto shapes = shape_keys();
  const auto targets9 = order9_targets();
  const std::vector<Graph> targets_g4 = {catalog_graph("G4")};
  const std::vector<Graph> targets_g123 = {catalog_graph("G1"), catalog_graph("G2"),
                                           catalog_graph("G3")};
  const std::vector<Graph> targets_g12 = {catalog_graph("G1"), catalog_graph("G2")};
  const std::vector<std::string> names_g4 = {"G4"};
  const std::vector<std::string> names_g123 = {"G1", "G2", "G3"};
  const std::vector<std::string> names_g12 = {"G1", "G2"};
  const auto g5key = canonical_form(catalog_graph("G5")).canon_g6;

  std::string hypothesis;
  std::vector<Counterexample> cex;
  auto certs = ordered_json::array();
  std::uint64_t hypothesis_count = 0;

  // shared conclusion: some u* with g - u* isomorphic to a target
  auto deleted_copy_conclusion = [&](const Graph& g, const std::vector<Graph>& targets,
                                     const std::vector<std::string>& names,
                                     const std::string& expect) {
    ++hypothesis_count;
    auto hit = find_deleted_copy(g, targets);
    if (!hit) {
      cex.push_back({g6(g), "no vertex u* with G - u* isomorphic to " + expect});
      return;
    }
    const auto& [ustar, i, map] = *hit;
    certs.push_back({{"g6", g6(g)},
                     {"u_star", ustar},
                     {"target", names[i]},
                     {"map", map_json(map)}});
  };

  switch (lemma_id) {
    case 4: {
      hypothesis = "chi_1(G) >= 3";
      for (std::size_t i = 0; i < tf10.size(); ++i) {
        if (chi[i] < 3) continue;
        ++hypothesis_count;
        const Graph& g = tf10[i];
        const int d = g.max_degree();
        if (d < 4 || d > 6)
          cex.push_back({g6(g), "max degree " + std::to_string(d) + " outside 4..6"});
        for (int u : max_degree_vertices(g)) {
          const int hd = decomposition_h(g, u).max_degree();
          if (hd < 2)
            cex.push_back({g6(g), "max degree of H is " + std::to_string(hd) +
                                      " < 2 for max-degree vertex " + std::to_string(u)});
        }
        certs.push_back({{"g6", g6(g)}, {"max_degree", d}});
      }
      break;
    }
    case 5: {
      hypothesis = "chi_1(G) = 3 and max degree 6";
      for (auto idx : members)
        if (tf10[idx].max_degree() == 6)
          deleted_copy_conclusion(tf10[idx], targets_g4, names_g4, "G4");
      break;
    }
    case 6: {
      hypothesis =
          "chi_1(G) = 3, max degree 5, some max-degree u and max-H-degree z with |N(u) cap N(z)| = 3";
      for (auto idx : members) {
        const Graph& g = tf10[idx];
        if (g.max_degree() != 5 || !some_az_eq3(g)) continue;
        deleted_copy_conclusion(g, targets_g4, names_g4, "G4");
      }
      break;
    }
    case 7: {
      hypothesis = "chi_1(G) = 3 and max degree 5";
      std::uint64_t branch_g5 = 0, branch_deleted = 0;
      for (auto idx : members) {
        const Graph& g = tf10[idx];
        if (g.max_degree() != 5) continue;
        ++hypothesis_count;
        const std::string key = g6(g);
        auto hit = find_deleted_copy(g, targets9);
        if (hit) {
          ++branch_deleted;
          const auto& [ustar, i, map] = *hit;
          certs.push_back({{"g6", key},
                           {"branch", "vertex_deleted_copy"},
                           {"u_star", ustar},
                           {"target", "G" + std::to_string(i + 1)},
                           {"map", map_json(map)}});
        } else if (key == g5key) {
          ++branch_g5;
          certs.push_back({{"g6", key}, {"branch", "isomorphic_to_G5"}});
        } else {
          cex.push_back({key, "neither a vertex-deleted G_i copy nor isomorphic to G5"});
        }
      }
      certs.insert(certs.begin(), ordered_json{{"branch_census",
                                                {{"vertex_deleted_copy", branch_deleted},
                                                 {"isomorphic_to_G5", branch_g5}}}});
      break;
    }
    case 8: {
      hypothesis = "chi_1(G) = 3, max degree 4, some max-degree u with 3 <= max degree of H <= 4";
      for (auto idx : members) {
        const Graph& g = tf10[idx];
        if (g.max_degree() != 4 || !some_h_degree_in(g, 3, 4)) continue;
        deleted_copy_conclusion(g, targets_g12, names_g12, "G1 or G2");
      }
      break;
    }
    case 9:
    case 10:
    case 11:
    case 12:
    case 13: {
      std::vector<detail::CanonKey> shape_list;
      std::string shape_name;
      switch (lemma_id) {
        case 9:
          shape_list = {shapes.p3_2k1, shapes.p3_k2};
          shape_name = "P3+2K1 or P3+K2";
          break;
        case 10:
          shape_list = {shapes.p4_k1};
          shape_name = "P4+K1";
          break;
        case 11:
          shape_list = {shapes.p5};
          shape_name = "P5";
          break;
        case 12:
          shape_list = {shapes.c5};
          shape_name = "C5";
          break;
        default:
          shape_list = {shapes.c4_k1};
          shape_name = "C4+K1";
          break;
      }
      hypothesis = "chi_1(G) = 3, max degree 4, some max-degree u with H isomorphic to " + shape_name;
      for (auto idx : members) {
        const Graph& g = tf10[idx];
        if (g.max_degree() != 4 || !some_h_shape(g, shape_list)) continue;
        deleted_copy_conclusion(g, targets_g123, names_g123, "G1, G2 or G3");
      }
      break;
    }
    default:
      break;
  }

  if (lemma_id != 7) {
    certs.insert(certs.begin(), ordered_json{{"hypothesis_matches", hypothesis_count}});
  } else {
    certs[0]["hypothesis_matches"] = hypothesis_count;
  }
  report.universe = {{"n", 10}, {"filter", "triangle-free"}, {"hypothesis", hypothesis}};
  report.certificates = certs;
  sort_counterexamples(cex);
  report.finish(std::move(cex));
  report.wall_time_ms = timer.ms();
  return report;
}

VerificationReport verify_lovasz_bound(int n_max, int k_max, UniverseStore& store) {
  Stopwatch timer;
  VerificationReport report;
  report.check_id = "lovasz";
  report.universe = {{"n", "1.." + std::to_string(n_max)},
                     {"filter", "triangle-free"},
                     {"hypothesis", "chi_k <= 1 + floor(max_degree/(k+1)) for k <= " +
                                        std::to_string(k_max)}};

  std::vector<Counterexample> cex;
  // tight_example[(k, max_degree)] = least canonical g6 attaining the bound
  std::map<std::pair<int, int>, std::string> tight;
  for (int n = 1; n <= n_max; ++n) {
    const auto& graphs = store.triangle_free(n);
    report.universe_size += graphs.size();
    std::vector<std::array<int, 3>> chis(graphs.size());
    internal::parallel_for(graphs.size(), store.workers(), [&](std::size_t i) {
      for (int k = 0; k <= 2; ++k)
        chis[i][k] = k <= k_max ? defective_chromatic_number(graphs[i], k).chi : 0;
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i];
      for (int k = 0; k <= k_max; ++k) {
        const int bound = lovasz_bound(g, k);
        if (chis[i][k] > bound)
          cex.push_back({g6(g), "chi_" + std::to_string(k) + " = " + std::to_string(chis[i][k]) +
                                    " exceeds bound " + std::to_string(bound)});
        if (chis[i][k] == bound) {
          auto& slot = tight[{k, g.max_degree()}];
          if (slot.empty()) slot = g6(g);
        }
      }
    }
  }

  auto tight_json = ordered_json::array();
  for (const auto& [kd, example] : tight)
    tight_json.push_back(
        {{"k", kd.first}, {"max_degree", kd.second}, {"bound_attained_by", example}});
  report.certificates = ordered_json::array({ordered_json{{"tight_examples", tight_json}}});

  sort_counterexamples(cex);
  report.finish(std::move(cex));
  report.wall_time_ms = timer.ms();
  return report;
}

VerificationReport verify_f32_lower_bound(UniverseStore& store, const CheckOptions& opts) {
  const int n_max = opts.long_mode ? 12 : 10;
  auto report = verify_colorable_sweep("f32", 1, n_max, 2, 2, store);
  report.universe["hypothesis"] =
      "every triangle-free graph with n <= " + std::to_string(n_max) + " is (2,2)-colorable";
  return report;
}

std::vector<std::string> all_check_ids() {
  std::vector<std::string> ids = {"catalog", "small-orders", "order9", "order10", "critical10"};
  for (int i = 4; i <= 13; ++i) ids.push_back("lemma" + std::to_string(i));
  ids.push_back("lovasz");
  ids.push_back("f32");
  return ids;
}

VerificationReport run_check(std::string_view check_id, UniverseStore& store,
                             const CheckOptions& opts) {
  if (check_id == "catalog") return validate_catalog(store);
  if (check_id == "small-orders") return verify_small_orders_colorable(store);
  if (check_id == "order9") return verify_order9_classification(store);
  if (check_id == "order10") return verify_order10_characterization(store);
  if (check_id == "critical10") return verify_critical_and_edge_critical_order10(store);
  if (check_id == "lovasz") return verify_lovasz_bound(10, 2, store);
  if (check_id == "f32") return verify_f32_lower_bound(store, opts);
  if (check_id.rfind("lemma", 0) == 0) {
    int id = 0;
    for (char c : check_id.substr(5)) {
      if (c < '0' || c > '9') throw std::invalid_argument("unknown check id: " + std::string(check_id));
      id = id * 10 + (c - '0');
    }
    return verify_structural_lemma(id, store);
  }
  throw std::invalid_argument("unknown check id: " + std::string(check_id));
}

}  // namespace kdefect
