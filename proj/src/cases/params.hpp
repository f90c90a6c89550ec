#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace vk::cases {

using json = nlohmann::json;

// Malformed case input; `path` names the offending field.
class ParamError : public std::runtime_error {
 public:
  ParamError(std::string path, const std::string& msg)
      : std::runtime_error(path.empty() ? msg : path + ": " + msg), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Number with an optional SI prefix and trailing unit name: "50k", "20fF",
// "1.5 meg", "0.2um". Throws std::invalid_argument.
double parse_si(const std::string& text);

// Read-only view of one JSON object in a case file.
class Params {
 public:
  Params(const json& j, std::string path);

  const std::string& path() const { return path_; }
  std::string at(const std::string& key) const;
  bool has(const std::string& key) const;
  const json& raw(const std::string& key) const;

  double num(const std::string& key) const;
  double num(const std::string& key, double fallback) const;
  std::optional<double> opt_num(const std::string& key) const;
  double positive(const std::string& key) const;
  long integer(const std::string& key) const;
  long integer(const std::string& key, long fallback) const;
  std::uint64_t u64(const std::string& key) const;
  std::string str(const std::string& key) const;
  std::string str(const std::string& key, const std::string& fallback) const;
  bool flag(const std::string& key, bool fallback) const;

  Params obj(const std::string& key) const;
  std::vector<Params> objs(const std::string& key) const;
  std::vector<double> nums(const std::string& key) const;
  std::vector<std::string> strs(const std::string& key) const;

  template <class T>
  T choice(const std::string& key, const std::map<std::string, T>& options) const {
    auto s = str(key);
    auto it = options.find(s);
    if (it == options.end()) bad(key, "unknown value '" + s + "'" + listing(options));
    return it->second;
  }
  template <class T>
  T choice(const std::string& key, const std::map<std::string, T>& options, T fallback) const {
    return has(key) ? choice(key, options) : fallback;
  }

  // Rejects keys not in `allowed`.
  void only(std::initializer_list<const char*> allowed) const;
  void only(const std::vector<std::string>& allowed) const;

  [[noreturn]] void bad(const std::string& key, const std::string& msg) const;

  static double number_of(const json& v, const std::string& where);

 private:
  template <class T>
  static std::string listing(const std::map<std::string, T>& options) {
    std::string s = " (expected one of";
    for (const auto& [k, _] : options) s += " " + k;
    return s + ")";
  }
  const json& need(const std::string& key) const;

  const json* j_;
  std::string path_;
};

}  // namespace vk::cases
