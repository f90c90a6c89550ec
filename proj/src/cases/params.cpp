#include "cases/params.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace vk::cases {

namespace {

bool unit_char(unsigned char c) { return std::isalpha(c) || c == '/' || c == '^' || std::isdigit(c) || c >= 0x80; }

}  // namespace

double parse_si(const std::string& text) {
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("empty number");
  const std::string s = text.substr(b, e - b + 1);
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || !std::isfinite(v)) throw std::invalid_argument("not a number: '" + s + "'");
  std::string rest(end);
  rest.erase(0, rest.find_first_not_of(" \t") == std::string::npos ? rest.size()
                                                                     : rest.find_first_not_of(" \t"));
  double scale = 1;
  std::size_t used = 0;
  if (rest.size() >= 3 && std::tolower(rest[0]) == 'm' && std::tolower(rest[1]) == 'e' &&
      std::tolower(rest[2]) == 'g') {
    scale = 1e6;
    used = 3;
  } else if (rest.rfind("\xC2\xB5", 0) == 0) {  // micro sign
    scale = 1e-6;
    used = 2;
  } else if (!rest.empty()) {
    switch (rest[0]) {
      case 'f': scale = 1e-15; break;
      case 'p': scale = 1e-12; break;
      case 'n': scale = 1e-9; break;
      case 'u': scale = 1e-6; break;
      case 'm': scale = 1e-3; break;
      case 'k': scale = 1e3; break;
      case 'M': scale = 1e6; break;
      case 'G': scale = 1e9; break;
      case 'T': scale = 1e12; break;
      default: break;
    }
    if (scale != 1) used = 1;
  }
  std::string unit = rest.substr(used);
  if (!unit.empty() && !std::isalpha(static_cast<unsigned char>(unit[0])) &&
      static_cast<unsigned char>(unit[0]) < 0x80)
    throw std::invalid_argument("bad unit suffix in '" + s + "'");
  for (unsigned char c : unit)
    if (!unit_char(c)) throw std::invalid_argument("bad unit suffix in '" + s + "'");
  return v * scale;
}

Params::Params(const json& j, std::string path) : j_(&j), path_(std::move(path)) {
  if (!j.is_object()) throw ParamError(path_, "expected an object");
}

std::string Params::at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

bool Params::has(const std::string& key) const { return j_->contains(key) && !(*j_)[key].is_null(); }

const json& Params::need(const std::string& key) const {
  if (!has(key)) throw ParamError(at(key), "required field is missing");
  return (*j_)[key];
}

const json& Params::raw(const std::string& key) const { return need(key); }

void Params::bad(const std::string& key, const std::string& msg) const {
  throw ParamError(key.empty() ? path_ : at(key), msg);
}

double Params::number_of(const json& v, const std::string& where) {
  if (v.is_number()) {
    double d = v.get<double>();
    if (!std::isfinite(d)) throw ParamError(where, "number is not finite");
    return d;
  }
  if (v.is_string()) {
    try {
      return parse_si(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParamError(where, e.what());
    }
  }
  throw ParamError(where, "expected a number");
}

double Params::num(const std::string& key) const { return number_of(need(key), at(key)); }

double Params::num(const std::string& key, double fallback) const {
  return has(key) ? num(key) : fallback;
}

std::optional<double> Params::opt_num(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return num(key);
}

double Params::positive(const std::string& key) const {
  double v = num(key);
  if (!(v > 0)) bad(key, "must be positive");
  return v;
}

long Params::integer(const std::string& key) const {
  double v = num(key);
  if (v != std::floor(v) || std::fabs(v) > 9.0e15) bad(key, "expected an integer");
  return static_cast<long>(v);
}

long Params::integer(const std::string& key, long fallback) const {
  return has(key) ? integer(key) : fallback;
}

std::uint64_t Params::u64(const std::string& key) const {
  const json& v = need(key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0) return v.get<std::uint64_t>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    int base = 10;
    std::size_t skip = 0;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) base = 16, skip = 2;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'b' || s[1] == 'B')) base = 2, skip = 2;
    std::uint64_t r = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data() + skip, end, r, base);
    if (ec == std::errc() && ptr == end && skip < s.size()) return r;
  }
  bad(key, "expected a non-negative integer (decimal, 0x hex or 0b binary string)");
}

std::string Params::str(const std::string& key) const {
  const json& v = need(key);
  if (!v.is_string()) bad(key, "expected a string");
  return v.get<std::string>();
}

std::string Params::str(const std::string& key, const std::string& fallback) const {
  return has(key) ? str(key) : fallback;
}

bool Params::flag(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const json& v = (*j_)[key];
  if (!v.is_boolean()) bad(key, "expected true or false");
  return v.get<bool>();
}

Params Params::obj(const std::string& key) const { return Params(need(key), at(key)); }

std::vector<Params> Params::objs(const std::string& key) const {
  const json& v = need(key);
  if (!v.is_array()) bad(key, "expected an array");
  std::vector<Params> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.emplace_back(v[i], at(key) + "[" + std::to_string(i) + "]");
  return out;
}

std::vector<double> Params::nums(const std::string& key) const {
  const json& v = need(key);
  if (!v.is_array()) bad(key, "expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(number_of(v[i], at(key) + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::string> Params::strs(const std::string& key) const {
  const json& v = need(key);
  if (!v.is_array()) bad(key, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) throw ParamError(at(key) + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

void Params::only(std::initializer_list<const char*> allowed) const {
  only(std::vector<std::string>(allowed.begin(), allowed.end()));
}

void Params::only(const std::vector<std::string>& allowed) const {
  for (const auto& [k, _] : j_->items()) {
    bool ok = false;
    for (const auto& a : allowed) ok |= k == a;
    if (!ok) throw ParamError(at(k), "unknown field");
  }
}

}  // namespace vk::cases
