#include "kdefect/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "kdefect/coloring.hpp"
#include "kdefect/graph6.hpp"
#include "kdefect/iso.hpp"

namespace kdefect {

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g = g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g = g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
  Graph g = path_graph(n);
  return g.add_edge(n - 1, 0);
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g = g.add_edge(u, a + v);
  return g;
}

Graph petersen_graph() {
  return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

Graph grotzsch_graph() {
  // Mycielski construction over C5: shadow vertex 5+i takes the outer
  // neighbors of i, apex 10 joins all shadows.
  Graph g(11);
  for (int i = 0; i < 5; ++i) {
    g = g.add_edge(i, (i + 1) % 5);
    g = g.add_edge(5 + i, (i + 1) % 5);
    g = g.add_edge(5 + i, (i + 4) % 5);
    g = g.add_edge(10, 5 + i);
  }
  return g;
}

namespace {

// Figure transcriptions. Boxes are independent sets, a double line joins
// every vertex of one box to every vertex of the other, circled vertices
// are single vertices.

// G1/G2/G3 share a skeleton on u,u1..u4,z1,z2,z,z3 and differ only in the
// edges between {z,z3} and {z1,z2}: 2, 3 and 4 edges respectively.
// Vertex order: 0=u 1=u1 2=u2 3=u3 4=u4 5=z1 6=z2 7=z 8=z3.
constexpr std::initializer_list<std::pair<int, int>> kG123Common = {
    {0, 1}, {0, 2}, {0, 3}, {0, 4},                  // u joined to {u1,u2} and {u3,u4}
    {1, 5}, {1, 6}, {2, 5}, {2, 6},                  // {u1,u2} x {z1,z2}
    {3, 7}, {3, 8}, {4, 7}, {4, 8}};                 // {u3,u4} x {z,z3}

Graph make_g123(std::initializer_list<std::pair<int, int>> extra) {
  Graph g = Graph::from_edges(9, kG123Common);
  for (auto [u, v] : extra) g = g.add_edge(u, v);
  return g;
}

// Vertex order: 0=u 1=u1 2=u2 3=u3 4=u4 5=u5 6=z1 7=z2 8=z.
Graph make_g4() {
  return Graph::from_edges(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},  // u joined to all u_i
                               {1, 6}, {1, 7}, {2, 6}, {2, 7},          // {u1,u2} x {z1,z2}
                               {8, 3}, {8, 4}, {8, 5},                  // z joined to {u3,u4,u5}
                               {8, 6}, {8, 7}});                        // z joined to {z1,z2}
}

// Vertex order: 0=u 1=v 2=u1 3=u2 4=u3 5=u4 6=u5 7=z1 8=z2 9=z.
Graph make_g5() {
  return Graph::from_edges(10, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},  // {u,v} x {u1..u5}
                                {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                                {9, 7}, {9, 8},                          // z joined to {z1,z2}
                                {9, 2}, {9, 3},                          // z joined to {u1,u2}
                                {6, 8}, {4, 8}, {4, 7}, {5, 7}});        // u5-z2, u3-z2, u3-z1, u4-z1
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  const std::vector<std::string> labels123 = {"u", "u1", "u2", "u3", "u4", "z1", "z2", "z", "z3"};

  CatalogEntry g1;
  g1.name = "G1";
  g1.graph = make_g123({{7, 5}, {7, 6}});
  g1.vertex_labels = labels123;
  g1.note = "two edges between the {z,z3} and {z1,z2} boxes; edge-critical, max degree 4";
  g1.order = 9;
  g1.chi1 = 3;
  g1.max_degree = 4;
  g1.critical_3_1 = true;
  g1.edge_critical_3_1 = true;
  entries.push_back(g1);

  CatalogEntry g2;
  g2.name = "G2";
  g2.graph = make_g123({{7, 5}, {7, 6}, {8, 5}});
  g2.vertex_labels = labels123;
  g2.note = "three edges between the {z,z3} and {z1,z2} boxes (15 edges total)";
  g2.order = 9;
  g2.chi1 = 3;
  g2.max_degree = 4;
  g2.critical_3_1 = true;
  g2.edge_critical_3_1 = false;
  entries.push_back(g2);

  CatalogEntry g3;
  g3.name = "G3";
  g3.graph = make_g123({{7, 5}, {7, 6}, {8, 5}, {8, 6}});
  g3.vertex_labels = labels123;
  g3.note = "complete join between the {z,z3} and {z1,z2} boxes (16 edges total)";
  g3.order = 9;
  g3.chi1 = 3;
  g3.max_degree = 4;
  g3.critical_3_1 = true;
  g3.edge_critical_3_1 = false;
  entries.push_back(g3);

  CatalogEntry g4;
  g4.name = "G4";
  g4.graph = make_g4();
  g4.vertex_labels = {"u", "u1", "u2", "u3", "u4", "u5", "z1", "z2", "z"};
  g4.note = "u joined to the five-vertex box u1..u5; edge-critical, max degree 5";
  g4.order = 9;
  g4.chi1 = 3;
  g4.max_degree = 5;
  g4.critical_3_1 = true;
  g4.edge_critical_3_1 = true;
  entries.push_back(g4);

  CatalogEntry g5;
  g5.name = "G5";
  g5.graph = make_g5();
  g5.vertex_labels = {"u", "v", "u1", "u2", "u3", "u4", "u5", "z1", "z2", "z"};
  g5.note = "the unique (3,1)-critical triangle-free graph of order 10";
  g5.order = 10;
  g5.chi1 = 3;
  g5.max_degree = 5;
  g5.critical_3_1 = true;
  g5.edge_critical_3_1 = true;
  entries.push_back(g5);

  CatalogEntry g1k1;
  g1k1.name = "G1uK1";
  g1k1.graph = disjoint_union(entries[0].graph, Graph(1));
  g1k1.vertex_labels = labels123;
  g1k1.vertex_labels.push_back("k1");
  g1k1.note = "G1 plus an isolated vertex";
  g1k1.order = 10;
  g1k1.chi1 = 3;
  g1k1.critical_3_1 = false;
  g1k1.edge_critical_3_1 = true;
  entries.push_back(g1k1);

  CatalogEntry g4k1;
  g4k1.name = "G4uK1";
  g4k1.graph = disjoint_union(entries[3].graph, Graph(1));
  g4k1.vertex_labels = entries[3].vertex_labels;
  g4k1.vertex_labels.push_back("k1");
  g4k1.note = "G4 plus an isolated vertex";
  g4k1.order = 10;
  g4k1.chi1 = 3;
  g4k1.critical_3_1 = false;
  g4k1.edge_critical_3_1 = true;
  entries.push_back(g4k1);

  CatalogEntry pet;
  pet.name = "petersen";
  pet.graph = petersen_graph();
  pet.order = 10;
  pet.chi1 = 2;
  pet.regular_degree = 3;
  entries.push_back(pet);

  CatalogEntry gro;
  gro.name = "grotzsch";
  gro.graph = grotzsch_graph();
  gro.order = 11;
  gro.chi0 = 4;
  gro.max_degree = 5;
  entries.push_back(gro);

  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& paper_catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : paper_catalog())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown catalog entry: " + std::string(name));
}

namespace {

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph catalog_graph(std::string_view name) {
  for (const auto& e : paper_catalog())
    if (e.name == name) return e.graph;
  if (name.size() >= 2 && (name[0] == 'P' || name[0] == 'C' || name[0] == 'K')) {
    const std::string_view rest = name.substr(1);
    if (name[0] == 'K') {
      const auto sep = rest.find_first_of(",x");
      if (sep != std::string_view::npos) {
        const auto a = parse_int(rest.substr(0, sep));
        const auto b = parse_int(rest.substr(sep + 1));
        if (a && b && *a >= 0 && *b >= 0 && *a + *b <= Graph::kMaxOrder)
          return complete_bipartite(*a, *b);
      }
      if (const auto m = parse_int(rest); m && *m >= 0 && *m <= Graph::kMaxOrder)
        return complete_graph(*m);
    } else if (const auto m = parse_int(rest); m && *m >= 0 && *m <= Graph::kMaxOrder) {
      if (name[0] == 'P') return path_graph(*m);
      if (*m >= 3) return cycle_graph(*m);
    }
  }
  throw std::invalid_argument("unknown catalog name: " + std::string(name));
}

namespace {

void check(std::vector<Counterexample>& cex, const CatalogEntry& e, bool ok,
           const std::string& assertion) {
  if (!ok) cex.push_back({write_graph6(e.graph), e.name + ": " + assertion});
}

}  // namespace

VerificationReport validate_catalog_entries(const std::vector<CatalogEntry>& entries,
                                            UniverseStore& store) {
  Stopwatch timer;
  VerificationReport report;
  report.check_id = "catalog";
  report.universe = {{"n", "9..10"},
                     {"filter", "triangle-free"},
                     {"hypothesis", "catalog assertions; order-9 chi_1=3 classes; order-10 critical class"}};

  std::vector<Counterexample> cex;
  for (const auto& e : entries) {
    check(cex, e, e.graph.order() == e.order,
          "order is " + std::to_string(e.graph.order()) + ", expected " + std::to_string(e.order));
    check(cex, e, e.graph.is_triangle_free() == e.triangle_free, "triangle-free mismatch");
    if (e.max_degree)
      check(cex, e, e.graph.max_degree() == *e.max_degree,
            "max degree is " + std::to_string(e.graph.max_degree()) + ", expected " +
                std::to_string(*e.max_degree));
    if (e.regular_degree) {
      bool regular = true;
      for (int v = 0; v < e.graph.order(); ++v) regular &= e.graph.degree(v) == *e.regular_degree;
      check(cex, e, regular, "not " + std::to_string(*e.regular_degree) + "-regular");
    }
    if (e.chi1)
      check(cex, e, defective_chromatic_number(e.graph, 1).chi == *e.chi1,
            "chi_1 != " + std::to_string(*e.chi1));
    if (e.chi0)
      check(cex, e, defective_chromatic_number(e.graph, 0).chi == *e.chi0,
            "chi_0 != " + std::to_string(*e.chi0));
    if (e.critical_3_1)
      check(cex, e, is_mk_critical(e.graph, 3, 1).critical == *e.critical_3_1,
            "(3,1)-criticality mismatch");
    if (e.edge_critical_3_1)
      check(cex, e, is_mk_edge_critical(e.graph, 3, 1).critical == *e.edge_critical_3_1,
            "(3,1)-edge-criticality mismatch");
  }

  // (b) the order-9 entries must be exactly the enumerated chi_1=3 classes
  std::set<std::string> catalog9;
  const CatalogEntry* order9[4] = {};
  int found9 = 0;
  for (const auto& e : entries)
    if (e.order == 9 && e.name.size() == 2 && e.name[0] == 'G') {
      catalog9.insert(canonical_form(e.graph).canon_g6);
      if (found9 < 4) order9[found9++] = &e;
    }
  if (found9 > 0)
    check(cex, *order9[0], catalog9.size() == static_cast<std::size_t>(found9),
          "order-9 entries are not pairwise non-isomorphic");

  const auto& tf9 = store.triangle_free(9);
  const auto& members9 = store.chi1_eq3(9);
  std::set<std::string> enum9;
  for (auto idx : members9) enum9.insert(write_graph6(tf9[idx]));  // already canonical
  if (catalog9 != enum9) {
    for (const auto& key : enum9)
      if (!catalog9.count(key))
        cex.push_back({key, "enumerated order-9 chi_1=3 class missing from catalog"});
    for (const auto& key : catalog9)
      if (!enum9.count(key)) cex.push_back({key, "catalog order-9 graph not found by enumeration"});
  }

  // (c) G5 must be the unique (3,1)-critical triangle-free order-10 class
  const auto& tf10 = store.triangle_free(10);
  const auto& crit10 = store.critical31_order10();
  std::set<std::string> critical_keys;
  for (auto idx : crit10) critical_keys.insert(write_graph6(tf10[idx]));
  for (const auto& e : entries)
    if (e.name == "G5") {
      const std::string g5key = canonical_form(e.graph).canon_g6;
      check(cex, e, critical_keys.size() == 1 && *critical_keys.begin() == g5key,
            "enumerated (3,1)-critical order-10 set does not equal {G5}");
    }

  report.universe_size = tf9.size() + tf10.size();
  auto certs = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json c;
    c["name"] = e.name;
    c["g6"] = canonical_form(e.graph).canon_g6;
    c["order"] = e.graph.order();
    c["edges"] = e.graph.edge_count();
    c["max_degree"] = e.graph.max_degree();
    if (!e.vertex_labels.empty()) {
      std::string lm;
      for (std::size_t v = 0; v < e.vertex_labels.size(); ++v) {
        if (v) lm += " ";
        lm += std::to_string(v) + "=" + e.vertex_labels[v];
      }
      c["figure_labels"] = lm;
    }
    if (!e.note.empty()) c["note"] = e.note;
    certs.push_back(c);
  }
  report.certificates = certs;
  report.finish(std::move(cex));
  report.wall_time_ms = timer.ms();
  return report;
}

VerificationReport validate_catalog(UniverseStore& store) {
  return validate_catalog_entries(paper_catalog(), store);
}

}  // namespace kdefect
