#include "cases/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <set>

namespace vk::cases {

namespace {

const std::set<std::string> kPrefixable{"s", "F", "V", "A", "W", "J", "Hz", "ohm", "m"};

struct Prefix {
  int exp;
  const char* sym;
};
constexpr Prefix kPrefixes[] = {{-15, "f"}, {-12, "p"}, {-9, "n"}, {-6, "u"}, {-3, "m"},
                                {0, ""},    {3, "k"},   {6, "M"},  {9, "G"},  {12, "T"}};

int pick_exponent(double mag) {
  if (mag == 0 || !std::isfinite(mag)) return 0;
  int e = static_cast<int>(std::floor(std::log10(mag) / 3.0)) * 3;
  // values like 999.9995 round up to the next prefix
  if (round6(mag / std::pow(10.0, e)) >= 1000) e += 3;
  if (e < -15) e = -15;
  if (e > 12) e = 12;
  return e;
}

const char* symbol(int e) {
  for (const auto& p : kPrefixes)
    if (p.exp == e) return p.sym;
  return "";
}

void flatten(const json& j, const std::string& path, std::vector<std::array<std::string, 3>>& rows);

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const json& j, const std::string& path, std::vector<std::array<std::string, 3>>& rows) {
  if (j.is_object() && j.contains("unit") && j.contains("value") && j.size() == 2) {
    const auto& v = j["value"];
    std::string text;
    if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) text += (i ? " " : "") + scalar_text(v[i]);
    } else {
      text = scalar_text(v);
    }
    rows.push_back({path, text, j["unit"].get<std::string>()});
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); })) {
    std::string text;
    for (std::size_t i = 0; i < j.size(); ++i) text += (i ? " " : "") + scalar_text(j[i]);
    rows.push_back({path, text, ""});
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.push_back({path, scalar_text(j), ""});
  }
}

}  // namespace

double round6(double v) {
  if (v == 0 || !std::isfinite(v)) return v == 0 ? 0.0 : v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return std::strtod(buf, nullptr);
}

json plain(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? json("nan") : json(v > 0 ? "inf" : "-inf");
  return round6(v);
}

json plain(const std::vector<double>& v) {
  json a = json::array();
  for (double d : v) a.push_back(plain(d));
  return a;
}

json quantity(double v, const std::string& unit) {
  int e = kPrefixable.count(unit) ? pick_exponent(std::fabs(v)) : 0;
  return {{"unit", std::string(symbol(e)) + unit}, {"value", plain(v / std::pow(10.0, e))}};
}

json quantities(const std::vector<double>& v, const std::string& unit) {
  double mag = 0;
  for (double d : v)
    if (std::isfinite(d)) mag = std::max(mag, std::fabs(d));
  int e = kPrefixable.count(unit) ? pick_exponent(mag) : 0;
  json a = json::array();
  for (double d : v) a.push_back(plain(d / std::pow(10.0, e)));
  return {{"unit", std::string(symbol(e)) + unit}, {"value", a}};
}

double unit_scale(const std::string& unit) {
  if (kPrefixable.count(unit)) return 1;
  for (const auto& p : kPrefixes) {
    std::string sym = p.sym;
    if (!sym.empty() && unit.size() > sym.size() && unit.compare(0, sym.size(), sym) == 0 &&
        kPrefixable.count(unit.substr(sym.size())))
      return std::pow(10.0, p.exp);
  }
  return 1;
}

json Report::to_json(const std::string& analysis, const json& inputs) const {
  json r;
  r["analysis"] = analysis;
  r["inputs"] = inputs;
  r["results"] = results_;
  r["diagnostics"] = {{"warnings", warnings_}};
  r["schema"] = 1;
  return r;
}

std::string render_json(const json& report) { return report.dump(2) + "\n"; }

std::string render_table(const json& report) {
  std::vector<std::array<std::string, 3>> rows;
  flatten(report.at("results"), "", rows);
  std::size_t w0 = 0, w1 = 0;
  for (const auto& r : rows) {
    w0 = std::max(w0, r[0].size());
    w1 = std::max(w1, r[1].size());
  }
  std::string out = "analysis: " + report.at("analysis").get<std::string>() + "\n";
  for (const auto& r : rows) {
    std::string line = r[0] + std::string(w0 - r[0].size() + 2, ' ') + r[1];
    if (!r[2].empty()) line += std::string(w1 - r[1].size() + 1, ' ') + r[2];
    out += line + "\n";
  }
  for (const auto& w : report.at("diagnostics").at("warnings")) out += "warning: " + w.get<std::string>() + "\n";
  return out;
}

}  // namespace vk::cases
