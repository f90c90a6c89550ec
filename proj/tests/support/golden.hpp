#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace vk::testing {

using json = nlohmann::json;

struct CaseFile {
  std::string name;  // file stem
  std::string text;
  json doc;
  std::optional<int> criterion;
};

// Every *.json under `dir`, sorted by name.
std::vector<CaseFile> load_cases(const std::string& dir);

struct Check {
  std::string path;
  std::string expected;     // as written in the case file
  std::string actual;       // resolved value, or why it could not be resolved
  bool ok = false;
  std::optional<std::string> known_mismatch;
};

struct CaseOutcome {
  std::string name;
  int exit_code = 0;
  std::string error;
  std::vector<Check> checks;

  // Every check agrees, except those documented as known mismatches, which
  // must still disagree.
  bool as_documented() const;
  bool all_ok() const;
};

// Runs the case through the library and evaluates its meta.expect entries.
CaseOutcome evaluate_case(const CaseFile& c);

// Compares one resolved report value against an expectation.
bool matches(const json& actual_node, const json& expected, const json& tol, std::string* shown);

// Navigates "results.a.b[2]" through a report, stepping into {unit, value}
// quantities. Returns the value in base units for quantities.
std::optional<json> resolve(const json& report, const std::string& path);

}  // namespace vk::testing
