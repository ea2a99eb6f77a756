#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace kdefect {

enum class Outcome { verified, refuted };

struct Counterexample {
  std::string g6;
  std::string reason;
};

/// Structured outcome of one theorem/lemma check over an exhaustively
/// enumerated universe. outcome == verified exactly when counterexamples
/// is empty; certificates carry check-specific witnesses that re-validate
/// independently.
struct VerificationReport {
  std::string check_id;
  nlohmann::ordered_json universe;  // {n, filter, hypothesis}
  std::uint64_t universe_size = 0;
  Outcome outcome = Outcome::verified;
  std::vector<Counterexample> counterexamples;
  nlohmann::ordered_json certificates = nlohmann::ordered_json::array();
  std::uint64_t wall_time_ms = 0;

  bool verified() const { return outcome == Outcome::verified; }
  void finish(std::vector<Counterexample> cex) {
    counterexamples = std::move(cex);
    outcome = counterexamples.empty() ? Outcome::verified : Outcome::refuted;
  }
};

nlohmann::ordered_json to_json(const VerificationReport& r);
/// One-line "check <id>: verified|refuted ..." summary.
std::string summary_line(const VerificationReport& r);
/// JSON with volatile timing fields blanked, for byte-identity comparisons.
nlohmann::ordered_json stable_json(const VerificationReport& r);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::uint64_t ms() const {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now() - start_)
                                          .count());
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace kdefect
