#include "kdefect/report.hpp"

namespace kdefect {

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["universe"] = r.universe;
  j["universe_size"] = r.universe_size;
  j["outcome"] = r.verified() ? "verified" : "refuted";
  auto cex = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples) cex.push_back({{"g6", c.g6}, {"reason", c.reason}});
  j["counterexamples"] = cex;
  j["certificates"] = r.certificates;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

std::string summary_line(const VerificationReport& r) {
  std::string line = "check " + r.check_id + ": " + (r.verified() ? "verified" : "REFUTED");
  line += " (universe_size=" + std::to_string(r.universe_size);
  if (!r.counterexamples.empty())
    line += ", counterexamples=" + std::to_string(r.counterexamples.size());
  line += ", wall_time_ms=" + std::to_string(r.wall_time_ms) + ")";
  return line;
}

nlohmann::ordered_json stable_json(const VerificationReport& r) {
  auto j = to_json(r);
  j["wall_time_ms"] = 0;
  return j;
}

}  // namespace kdefect
