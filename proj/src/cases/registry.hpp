#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cases/params.hpp"
#include "cases/report.hpp"

namespace vk::cases {

struct ParamDoc {
  std::string name;
  std::string type;
  bool required;
  std::string doc;
};

using Runner = std::function<void(Report&)>;

// `prepare` reads and checks every parameter and throws ParamError on bad
// input; the returned runner does the numeric work.
struct Analysis {
  std::string id;
  std::string module;
  std::string summary;
  std::vector<ParamDoc> params;
  std::function<Runner(const Params&)> prepare;
};

class Registry {
 public:
  void add(Analysis a);
  const Analysis* find(const std::string& id) const;
  const std::vector<Analysis>& all() const { return list_; }

 private:
  std::vector<Analysis> list_;
};

const Registry& registry();

void register_device(Registry& r);
void register_gates(Registry& r);
void register_interconnect(Registry& r);
void register_effort(Registry& r);
void register_timing(Registry& r);
void register_power(Registry& r);
void register_memory(Registry& r);
void register_testability(Registry& r);

enum class Format { Json, Table };

struct Outcome {
  int exit_code = 0;    // 0 ok, 1 malformed input, 2 analysis failure
  std::string output;   // report or verdict text
  std::string error;    // JSON error object when exit_code != 0
};

Outcome run_case(const std::string& case_text, Format format);
Outcome validate_case(const std::string& case_text);
std::string list_analyses(Format format);

}  // namespace vk::cases
