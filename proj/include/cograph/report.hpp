#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace cograph {

/// Outcome of one verification run, serializable as JSON.
struct CheckReport {
  std::string check;
  nlohmann::json parameters = nlohmann::json::object();
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> counterexamples;  // canonical cotree encodings
  std::vector<std::string> notes;            // one per counterexample
  std::vector<std::string> remarks;          // informational, not failures

  void fail(const std::string& encoding, const std::string& note) {
    passed = false;
    if (counterexamples.size() < 20) {
      counterexamples.push_back(encoding);
      notes.push_back(note);
    }
  }

  /// Fold another report in as a sub-check.
  void absorb(const CheckReport& other) {
    cases += other.cases;
    if (!other.passed) passed = false;
    for (std::size_t i = 0; i < other.counterexamples.size() && counterexamples.size() < 20; ++i) {
      counterexamples.push_back(other.counterexamples[i]);
      notes.push_back(other.check + ": " + other.notes[i]);
    }
    for (const auto& r : other.remarks) remarks.push_back(other.check + ": " + r);
  }
};

inline nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["parameters"] = r.parameters;
  j["passed"] = r.passed;
  j["cases"] = r.cases;
  j["counterexamples"] = nlohmann::json::array();
  for (std::size_t i = 0; i < r.counterexamples.size(); ++i)
    j["counterexamples"].push_back({{"cotree", r.counterexamples[i]}, {"note", r.notes[i]}});
  if (!r.remarks.empty()) j["remarks"] = r.remarks;
  return j;
}

}  // namespace cograph
