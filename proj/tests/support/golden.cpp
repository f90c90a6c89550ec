#include "support/golden.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cases/params.hpp"
#include "cases/registry.hpp"
#include "cases/report.hpp"

namespace vk::testing {

namespace fs = std::filesystem;

std::vector<CaseFile> load_cases(const std::string& dir) {
  std::vector<CaseFile> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    CaseFile c;
    c.name = entry.path().stem().string();
    c.text = ss.str();
    c.doc = json::parse(c.text);
    if (c.doc.contains("meta") && c.doc["meta"].contains("criterion"))
      c.criterion = c.doc["meta"]["criterion"].get<int>();
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

namespace {

bool is_quantity(const json& j) {
  return j.is_object() && j.size() == 2 && j.contains("unit") && j.contains("value");
}

json to_base(const json& value, double scale) {
  if (value.is_number()) return value.get<double>() * scale;
  if (value.is_array()) {
    json a = json::array();
    for (const auto& v : value) a.push_back(to_base(v, scale));
    return a;
  }
  return value;
}

// Splits "0.83n" into mantissa 0.83 and scale 1e-9.
void mantissa_of(const json& expected, double* mantissa, double* scale) {
  if (expected.is_number()) {
    *mantissa = expected.get<double>();
    *scale = 1;
    return;
  }
  const auto s = expected.get<std::string>();
  *mantissa = std::strtod(s.c_str(), nullptr);
  double full = cases::parse_si(s);
  *scale = *mantissa != 0 ? full / *mantissa : 1;
}

}  // namespace

std::optional<json> resolve(const json& report, const std::string& path) {
  const json* cur = &report;
  std::optional<double> scale;
  std::size_t pos = 0;
  while (pos <= path.size()) {
    std::size_t dot = path.find('.', pos);
    std::string token = path.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    std::size_t bracket = token.find('[');
    std::string key = token.substr(0, bracket);
    if (!key.empty()) {
      if (!cur->is_object() || !cur->contains(key)) return std::nullopt;
      cur = &(*cur)[key];
    }
    while (bracket != std::string::npos) {
      std::size_t close = token.find(']', bracket);
      if (close == std::string::npos) return std::nullopt;
      std::size_t index = std::stoul(token.substr(bracket + 1, close - bracket - 1));
      if (is_quantity(*cur)) {
        scale = cases::unit_scale((*cur)["unit"].get<std::string>());
        cur = &(*cur)["value"];
      }
      if (!cur->is_array() || index >= cur->size()) return std::nullopt;
      cur = &(*cur)[index];
      bracket = token.find('[', close);
    }
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  if (is_quantity(*cur))
    return to_base((*cur)["value"], cases::unit_scale((*cur)["unit"].get<std::string>()));
  if (scale) return to_base(*cur, *scale);
  return std::optional<json>(std::in_place, *cur);
}

bool matches(const json& actual, const json& expected, const json& tol, std::string* shown) {
  *shown = actual.is_string() ? actual.get<std::string>() : actual.dump();
  if (expected.is_boolean()) return actual.is_boolean() && actual == expected;
  if (actual.is_string()) return expected.is_string() && actual == expected;
  if (!actual.is_number()) return false;
  double a = actual.get<double>();
  double e = 0;
  try {
    e = expected.is_number() ? expected.get<double>() : cases::parse_si(expected.get<std::string>());
  } catch (const std::exception&) {
    return false;
  }
  if (tol.is_null()) return a == e;

  bool ok = false;
  if (tol.contains("rel")) ok |= std::fabs(a - e) <= tol["rel"].get<double>() * std::fabs(e);
  if (tol.contains("abs")) ok |= std::fabs(a - e) <= tol["abs"].get<double>();
  if (tol.contains("printed_decimals") || tol.contains("truncated_decimals")) {
    double m = 0, scale = 1;
    mantissa_of(expected, &m, &scale);
    double am = a / scale;
    if (tol.contains("printed_decimals")) {
      double half = 0.5 * std::pow(10.0, -tol["printed_decimals"].get<int>());
      ok |= std::fabs(am - m) <= half * (1 + 1e-9);
    }
    if (tol.contains("truncated_decimals")) {
      double step = std::pow(10.0, tol["truncated_decimals"].get<int>());
      double cut = std::trunc(am * step + std::copysign(1e-9, am)) / step;
      ok |= std::fabs(cut - m) <= 1e-9 * std::max(1.0, std::fabs(m));
    }
  }
  return ok;
}

bool CaseOutcome::all_ok() const {
  if (exit_code != 0) return false;
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

bool CaseOutcome::as_documented() const {
  if (exit_code != 0) return false;
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.ok != c.known_mismatch.has_value(); });
}

CaseOutcome evaluate_case(const CaseFile& c) {
  CaseOutcome out;
  out.name = c.name;
  auto run = cases::run_case(c.text, cases::Format::Json);
  out.exit_code = run.exit_code;
  out.error = run.error;
  if (run.exit_code != 0) return out;
  json report = json::parse(run.output);
  if (!c.doc.contains("meta") || !c.doc["meta"].contains("expect")) return out;
  for (const auto& e : c.doc["meta"]["expect"]) {
    Check k;
    k.path = e["path"].get<std::string>();
    k.expected = e["value"].is_string() ? e["value"].get<std::string>() : e["value"].dump();
    if (e.contains("known_mismatch")) k.known_mismatch = e["known_mismatch"].get<std::string>();
    auto actual = resolve(report, k.path);
    if (!actual) {
      k.actual = "<missing>";
    } else {
      k.ok = matches(*actual, e["value"], e.contains("tol") ? e["tol"] : json(), &k.actual);
    }
    out.checks.push_back(std::move(k));
  }
  return out;
}

}  // namespace vk::testing
