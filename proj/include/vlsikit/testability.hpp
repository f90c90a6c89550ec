#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vk {

// Polynomial over GF(2); coeffs[i] is the coefficient of x^i.
struct GfPolynomial {
  std::vector<std::uint8_t> coeffs;

  int degree() const;
  static GfPolynomial parse(const std::string& text);  // e.g. "1 + x^2 + x^7 + x^8"
  std::string to_string() const;
};

// Modular (Galois) LFSR: each clock, bit n-1 feeds bit 0 and is XORed into
// every bit i with c_i = 1.
struct Lfsr {
  int n = 0;
  std::uint64_t feedback_mask = 0;  // bits i < n with c_i = 1, bit 0 included
  std::vector<int> taps;            // XOR positions 0 < i < n
  std::vector<std::vector<std::uint8_t>> matrix;  // next = matrix * state

  std::uint64_t step(std::uint64_t state) const;
  std::uint64_t step_matrix(std::uint64_t state) const;
};

Lfsr lfsr_build(const GfPolynomial& poly);

struct LfsrRun {
  std::vector<std::uint64_t> states;  // seed first, steps + 1 entries
  std::optional<std::uint64_t> period;
};

LfsrRun lfsr_run(const Lfsr& lfsr, std::uint64_t seed, std::uint64_t steps);

enum class GateType { And, Or, Nand, Nor, Not, Xor, Xnor, Buf };

struct NetGate {
  GateType type;
  std::vector<std::string> inputs;
  std::string output;
};

struct GateNetlist {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<NetGate> gates;
};

GateType parse_gate_type(const std::string& s);
const char* to_string(GateType t);

struct StuckFault {
  std::string net;
  bool value;

  bool operator==(const StuckFault&) const = default;
};

std::string to_string(const StuckFault& f);

// Netlist levelized once. Each net carries 64 patterns per word.
class CompiledNetlist {
 public:
  explicit CompiledNetlist(const GateNetlist& net, bool reverse_ties = false);

  std::size_t input_count() const { return inputs_.size(); }
  int net_index(const std::string& name) const;
  const std::vector<std::string>& order() const { return order_names_; }

  // input words in declaration order; returns one word per primary output
  std::vector<std::uint64_t> eval(const std::vector<std::uint64_t>& in,
                                  const StuckFault* fault = nullptr) const;
  std::vector<std::uint64_t> eval_all(const std::vector<std::uint64_t>& in,
                                      const StuckFault* fault = nullptr) const;

 private:
  struct G {
    GateType type;
    std::vector<int> in;
    int out;
  };
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<int> inputs_, outputs_;
  std::vector<G> gates_;
  std::vector<std::string> order_names_;
};

std::map<std::string, bool> logic_simulate(const GateNetlist& net,
                                           const std::map<std::string, bool>& vector);

// Every net stuck at 0 and at 1, in net declaration order.
std::vector<StuckFault> all_faults(const GateNetlist& net);

// Per vector (input values in declaration order), the faults it detects.
std::vector<std::vector<StuckFault>> fault_simulate(const GateNetlist& net,
                                                    const std::vector<std::vector<bool>>& vectors,
                                                    const std::vector<StuckFault>& faults);

// Lexicographically smallest detecting vector, first input most significant;
// nullopt when the fault is untestable.
std::optional<std::vector<bool>> atpg_exhaustive(const GateNetlist& net, const StuckFault& fault);

}  // namespace vk
