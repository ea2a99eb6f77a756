// kdefect: exact k-defective chromatic numbers of small graphs,
// exhaustive triangle-free enumeration, and theorem verification with
// checkable certificates.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kdefect/catalog.hpp"
#include "kdefect/coloring.hpp"
#include "kdefect/enumerate.hpp"
#include "kdefect/graph6.hpp"
#include "kdefect/iso.hpp"
#include "kdefect/report.hpp"
#include "kdefect/universe.hpp"
#include "kdefect/verify.hpp"

namespace {

using kdefect::Graph;
using nlohmann::ordered_json;

constexpr int kExitVerified = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

struct InputLine {
  std::string text;
  std::size_t line_no;
};

// INPUT is a file path when one exists, "-" or absent for stdin, otherwise
// a single inline graph6 record.
std::vector<InputLine> read_input(const std::string& input) {
  std::vector<InputLine> lines;
  auto drain = [&](std::istream& in) {
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (!line.empty()) lines.push_back({line, no});
    }
  };
  if (input.empty() || input == "-") {
    drain(std::cin);
  } else if (std::filesystem::exists(input)) {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open " + input);
    drain(in);
  } else {
    lines.push_back({input, 1});
  }
  return lines;
}

int for_each_graph(const std::string& input, const std::function<void(const Graph&, const std::string&)>& fn) {
  std::vector<InputLine> lines;
  try {
    lines = read_input(input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  for (const auto& [text, line_no] : lines) {
    try {
      fn(kdefect::parse_graph6(text), text);
    } catch (const kdefect::Graph6ParseError& e) {
      std::cerr << "parse error at line " << line_no << ": " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return kExitVerified;
}

Graph load_single(const std::string& input) {
  const auto lines = read_input(input);
  if (lines.size() != 1) throw std::runtime_error("expected exactly one graph6 record");
  return kdefect::parse_graph6(lines[0].text);
}

std::string default_cache_dir() {
  const char* env = std::getenv("KDEFECT_CACHE_DIR");
  return env ? env : "";
}

struct ShardSpec {
  int index = 0;
  int count = 1;
};

ShardSpec parse_shard(const std::string& text) {
  ShardSpec s;
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw CLI::ValidationError("--shard", "expected i/of");
  try {
    s.index = std::stoi(text.substr(0, slash));
    s.count = std::stoi(text.substr(slash + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--shard", "expected integers i/of");
  }
  if (s.count < 1 || s.index < 0 || s.index >= s.count)
    throw CLI::ValidationError("--shard", "need 0 <= i < of");
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact k-defective coloring, triangle-free enumeration and theorem verification"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  int arg_k = 1, arg_m = 2, arg_n = 0, workers = 1;
  std::string input, out_path, filter = "triangle-free", shard_text = "0/1";
  std::string cache_dir = default_cache_dir();
  std::uint64_t seed = 0;
  bool json_output = false, long_mode = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json_output, "emit JSON instead of plain text");
  };

  auto* chi = app.add_subcommand("chi", "k-defective chromatic number per input graph");
  chi->add_option("input", input, "graph6 file, inline record, or - for stdin");
  chi->add_option("--k", arg_k, "defect bound")->capture_default_str();
  add_common(chi);

  auto* color = app.add_subcommand("color", "decide (m,k)-colorability per input graph");
  color->add_option("input", input, "graph6 file, inline record, or - for stdin");
  color->add_option("--m", arg_m, "number of colors")->capture_default_str();
  color->add_option("--k", arg_k, "defect bound")->capture_default_str();
  add_common(color);

  auto* critical = app.add_subcommand("critical", "(m,k)-criticality per input graph");
  critical->add_option("input", input, "graph6 file, inline record, or - for stdin");
  critical->add_option("--m", arg_m, "number of colors")->capture_default_str();
  critical->add_option("--k", arg_k, "defect bound")->capture_default_str();
  add_common(critical);

  auto* edge_critical = app.add_subcommand("edge-critical", "(m,k)-edge-criticality per input graph");
  edge_critical->add_option("input", input, "graph6 file, inline record, or - for stdin");
  edge_critical->add_option("--m", arg_m, "number of colors")->capture_default_str();
  edge_critical->add_option("--k", arg_k, "defect bound")->capture_default_str();
  add_common(edge_critical);

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "isomorphism test with witness map");
  iso->add_option("a", iso_a, "first graph (inline g6 or file)")->required();
  iso->add_option("b", iso_b, "second graph (inline g6 or file)")->required();
  add_common(iso);

  auto* enumerate = app.add_subcommand("enumerate", "one canonical graph6 line per isomorphism class");
  enumerate->add_option("--n", arg_n, "order")->required();
  enumerate->add_option("--filter", filter, "triangle-free|all")->capture_default_str();
  enumerate->add_option("--out", out_path, "output file (stdout when absent)");
  enumerate->add_option("--shard", shard_text, "i/of: process only parents with index % of == i");
  enumerate->add_option("--workers", workers, "worker threads")->capture_default_str();
  add_common(enumerate);

  auto* catalog = app.add_subcommand("catalog", "named graphs used by the verification checks");
  catalog->add_option("--out", out_path, "write catalog.g6 (plus .labels.txt sidecar)");
  add_common(catalog);

  std::vector<std::string> checks;
  auto* verify = app.add_subcommand("verify", "run theorem/lemma checks and write a report");
  verify->add_option("checks", checks, "check ids or 'all'");
  verify->add_option("--out", out_path, "report file (default verify-report.json)");
  verify->add_option("--workers", workers, "worker threads")->capture_default_str();
  verify->add_option("--cache-dir", cache_dir,
                     "universe cache directory (env KDEFECT_CACHE_DIR)");
  verify->add_flag("--long", long_mode, "enable the n=11,12 sweeps");
  verify->add_option("--seed", seed, "seed accepted for reproducibility of sampled output");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (chi->parsed()) {
      return for_each_graph(input, [&](const Graph& g, const std::string& line) {
        const auto r = kdefect::defective_chromatic_number(g, arg_k);
        if (json_output) {
          ordered_json j{{"g6", line}, {"k", arg_k}, {"chi", r.chi}, {"witness", r.witness.to_string()}};
          std::cout << j.dump() << '\n';
        } else {
          std::cout << line << '\t' << r.chi << '\t' << r.witness.to_string() << '\n';
        }
      });
    }

    if (color->parsed()) {
      return for_each_graph(input, [&](const Graph& g, const std::string& line) {
        const auto p = kdefect::find_mk_coloring(g, arg_m, arg_k);
        if (json_output) {
          ordered_json j{{"g6", line}, {"m", arg_m}, {"k", arg_k}, {"colorable", p.has_value()}};
          if (p) j["witness"] = p->to_string();
          std::cout << j.dump() << '\n';
        } else if (p) {
          std::cout << line << "\tyes\t" << p->to_string() << '\n';
        } else {
          std::cout << line << "\tno\n";
        }
      });
    }

    if (critical->parsed() || edge_critical->parsed()) {
      const bool edges = edge_critical->parsed();
      return for_each_graph(input, [&](const Graph& g, const std::string& line) {
        const auto r = edges ? kdefect::is_mk_edge_critical(g, arg_m, arg_k)
                             : kdefect::is_mk_critical(g, arg_m, arg_k);
        if (json_output) {
          ordered_json j{{"g6", line}, {"m", arg_m}, {"k", arg_k}, {"critical", r.critical}};
          auto w = ordered_json::array();
          for (const auto& p : r.witnesses) w.push_back(p.to_string());
          j["witnesses"] = w;
          std::cout << j.dump() << '\n';
        } else {
          std::cout << line << '\t' << (r.critical ? "yes" : "no") << '\n';
        }
      });
    }

    if (iso->parsed()) {
      const Graph a = load_single(iso_a), b = load_single(iso_b);
      const auto map = kdefect::are_isomorphic(a, b);
      if (json_output) {
        ordered_json j{{"isomorphic", map.has_value()}};
        if (map) {
          auto m = ordered_json::array();
          for (int v : *map) m.push_back(v);
          j["map"] = m;
        }
        std::cout << j.dump() << '\n';
      } else if (map) {
        std::cout << "isomorphic:";
        for (std::size_t v = 0; v < map->size(); ++v) std::cout << ' ' << v << "->" << (*map)[v];
        std::cout << '\n';
      } else {
        std::cout << "non-isomorphic\n";
      }
      return map ? kExitVerified : kExitRefuted;
    }

    if (enumerate->parsed()) {
      const ShardSpec shard = parse_shard(shard_text);
      kdefect::GraphFilter gfilter;
      if (filter == "triangle-free" || filter == "tf")
        gfilter = kdefect::GraphFilter::triangle_free;
      else if (filter == "all")
        gfilter = kdefect::GraphFilter::all;
      else {
        std::cerr << "error: unknown filter '" << filter << "' (triangle-free|all)\n";
        return kExitUsage;
      }
      if (gfilter == kdefect::GraphFilter::all && arg_n > 7) {
        std::cerr << "error: --filter all supports n <= 7\n";
        return kExitUsage;
      }

      std::vector<std::string> lines;
      std::mutex mu;
      kdefect::EnumerateOptions opts;
      opts.workers = workers;
      opts.shard_index = shard.index;
      opts.shard_count = shard.count;
      kdefect::EnumerationSummary summary;
      try {
        summary = kdefect::enumerate_classes(
            arg_n, gfilter,
            [&](const Graph& g) {
              std::string line = kdefect::canonical_form(g).canon_g6;
              std::lock_guard<std::mutex> lock(mu);
              lines.push_back(std::move(line));
            },
            opts);
      } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
      }
      std::sort(lines.begin(), lines.end());

      if (out_path.empty()) {
        for (const auto& line : lines) std::cout << line << '\n';
      } else {
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "error: cannot write " << out_path << '\n';
          return kExitUsage;
        }
        for (const auto& line : lines) out << line << '\n';
      }
      if (json_output) {
        ordered_json j{{"n", summary.n}, {"classes", summary.class_count}};
        auto dh = ordered_json::object();
        for (auto [d, c] : summary.degree_histogram) dh[std::to_string(d)] = c;
        j["max_degree_histogram"] = dh;
        std::cerr << j.dump() << '\n';
      } else {
        std::cerr << "n=" << summary.n << " classes=" << summary.class_count << '\n';
      }
      return kExitVerified;
    }

    if (catalog->parsed()) {
      const auto& entries = kdefect::paper_catalog();
      if (json_output) {
        auto arr = ordered_json::array();
        for (const auto& e : entries) {
          ordered_json j{{"name", e.name},
                         {"g6", kdefect::write_graph6(e.graph)},
                         {"canonical_g6", kdefect::canonical_form(e.graph).canon_g6},
                         {"order", e.graph.order()},
                         {"edges", e.graph.edge_count()},
                         {"max_degree", e.graph.max_degree()}};
          if (!e.vertex_labels.empty()) j["figure_labels"] = e.vertex_labels;
          if (!e.note.empty()) j["note"] = e.note;
          arr.push_back(j);
        }
        std::cout << arr.dump(2) << '\n';
      } else {
        for (const auto& e : entries)
          std::cout << e.name << '\t' << kdefect::write_graph6(e.graph) << "\tn=" << e.graph.order()
                    << "\tedges=" << e.graph.edge_count() << "\tmax_degree=" << e.graph.max_degree()
                    << '\n';
      }
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "error: cannot write " << out_path << '\n';
          return kExitUsage;
        }
        for (const auto& e : entries) out << kdefect::write_graph6(e.graph) << '\n';
        std::ofstream labels(out_path + ".labels.txt");
        for (const auto& e : entries) {
          labels << e.name << ":";
          for (std::size_t v = 0; v < e.vertex_labels.size(); ++v)
            labels << ' ' << v << '=' << e.vertex_labels[v];
          if (e.vertex_labels.empty()) labels << " (no figure labels)";
          labels << '\n';
        }
      }
      return kExitVerified;
    }

    if (verify->parsed()) {
      std::vector<std::string> selected;
      if (checks.empty() || (checks.size() == 1 && checks[0] == "all")) {
        selected = kdefect::all_check_ids();
      } else {
        const auto known = kdefect::all_check_ids();
        for (const auto& c : checks) {
          if (std::find(known.begin(), known.end(), c) == known.end()) {
            std::cerr << "error: unknown check id '" << c << "'\n";
            return kExitUsage;
          }
          selected.push_back(c);
        }
      }

      kdefect::CacheConfig cache;
      if (!cache_dir.empty()) cache.dir = cache_dir;
      kdefect::UniverseStore store(cache, workers);
      kdefect::CheckOptions opts;
      opts.long_mode = long_mode;

      auto reports = ordered_json::array();
      bool all_verified = true;
      for (const auto& id : selected) {
        const auto report = kdefect::run_check(id, store, opts);
        all_verified &= report.verified();
        reports.push_back(kdefect::to_json(report));
        if (!json_output) std::cout << kdefect::summary_line(report) << '\n';
      }
      if (json_output) std::cout << reports.dump(2) << '\n';

      const std::string report_file = out_path.empty() ? "verify-report.json" : out_path;
      std::ofstream out(report_file);
      if (!out) {
        std::cerr << "error: cannot write " << report_file << '\n';
        return kExitUsage;
      }
      out << reports.dump(2) << '\n';
      if (!json_output)
        std::cout << (all_verified ? "all selected checks verified" : "REFUTATION FOUND") << " ("
                  << report_file << ")\n";
      return all_verified ? kExitVerified : kExitRefuted;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const kdefect::Graph6ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
