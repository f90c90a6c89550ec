#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace vk::cases {

using json = nlohmann::json;

double round6(double v);

// {"unit": "<prefix><unit>", "value": v} with the prefix chosen so the
// mantissa lands in [1, 1000). Units outside the prefixable set pass through.
json quantity(double v, const std::string& unit);
json quantities(const std::vector<double>& v, const std::string& unit);
json plain(double v);
json plain(const std::vector<double>& v);

// Multiplier of a unit string produced by quantity(), e.g. "ns" -> 1e-9.
double unit_scale(const std::string& unit);

class Report {
 public:
  json& results() { return results_; }
  void set(const std::string& key, json v) { results_[key] = std::move(v); }
  void q(const std::string& key, double v, const std::string& unit) { set(key, quantity(v, unit)); }
  void x(const std::string& key, double v) { set(key, plain(v)); }
  void warn(std::string msg) { warnings_.push_back(std::move(msg)); }

  json to_json(const std::string& analysis, const json& inputs) const;

 private:
  json results_ = json::object();
  std::vector<std::string> warnings_;
};

std::string render_json(const json& report);
std::string render_table(const json& report);

}  // namespace vk::cases
