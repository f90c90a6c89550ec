#pragma once

#include <stdexcept>
#include <string>

namespace vk {

enum class ErrorKind {
  Input,       // malformed or out-of-domain argument
  Domain,      // physically meaningless configuration (e.g. device never turns on)
  Infeasible,  // constraint set has no solution
  Solver,      // numeric method failed to converge or bracket
  Size,        // enumeration limit exceeded
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool ok, const std::string& msg) {
  if (!ok) fail(ErrorKind::Input, msg);
}

}  // namespace vk
