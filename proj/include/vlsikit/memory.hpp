#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vlsikit/device.hpp"

namespace vk {

struct CellDevice {
  double k_prime = 0;   // A/V^2
  double w_over_l = 0;
  double v_t = 0;       // magnitude at zero body bias
  double gamma = 0;     // body effect, applied to the access device only
  double phi2f = 0.6;

  double k() const { return k_prime * w_over_l; }
};

// Six-transistor cell. The node under study is the storage side connected to
// the bitline; the opposite node is assumed at its ideal rail.
struct SramCell {
  CellDevice access, pulldown, pullup;
  double v_dd = 0;
  double v_bitline = 0;
  std::optional<double> v_wordline;  // defaults to v_dd

  double wordline() const { return v_wordline.value_or(v_dd); }
};

enum class CellMode { ReadDisturb, Write };

struct CellSolution {
  double v;
  std::vector<double> roots;  // both roots of the quadratic for the final regions
  Region access;
  Region other;               // pulldown for read, pullup for write
};

// Read: the node holding 0 rises as the access device dumps bitline charge
// into the pulldown. Write: the node holding 1 falls as the access device
// pulls it toward the bitline against the pullup.
CellSolution cell_node_voltage(const SramCell& cell, CellMode mode);

enum class SizedDevice { Access, Pullup };

// W/L of `which` that balances access and pullup currents with the node at
// `v_trip` and the bitline at `cell.v_bitline`; the W/L of `which` in `cell`
// is ignored.
double write_sizing(const SramCell& cell, SizedDevice which, double v_trip);

// Smallest load resistor of a resistive-load cell keeping the 0 node at or
// below v_q_max while the precharged bitline is read.
double load_resistor_bound(const CellDevice& access, const CellDevice& pulldown, double v_dd,
                           double v_q_max);

struct BitlineGeometry {
  int rows = 0;
  double cell_height = 0;
  double bl_width = 0;
  double access_width = 0;
  double c_d = 0;      // diffusion F/m of device width
  double c_pp = 0;     // F/m^2
  double c_fr = 0;     // F/m per edge
  int fringe_edges = 2;
  double r_sq = 0;
};

struct BitlineModel {
  double c_diffusion;
  double c_wire;
  double c_total;
  double r_total;
  double delay;  // distributed RC / 2
};

BitlineModel bitline_model(const BitlineGeometry& g);

struct ArrayPlan {
  int rows = 1;
  int cols = 1;
  int decode_levels = 0;
  int mux_levels = 0;
  // optional numeric parasitics; all must be set for a numeric total
  std::optional<double> r_word, c_word, r_bit, c_bit, d_gate, d_mux;
};

struct ReadDelay {
  double k_gate;   // multiple of the gate delay
  double k_word;   // multiple of R_word C_word
  double k_bit;    // multiple of R_bit C_bit
  double k_mux;    // multiple of the mux delay
  std::optional<double> total;
};

ReadDelay blocked_read_delay(const ArrayPlan& plan);

enum class GateKind { Nand, Nor, Inverter };

struct DecoderStage {
  GateKind kind;
  int fan_in;
  long count;
};

long decoder_cost(const std::vector<DecoderStage>& plan);

struct AddressField {
  std::string name;
  int width;
  int lsb;
  std::uint64_t value;
};

struct AddressMap {
  long chips = 1;     // devices sharing the data bus; selects the byte lane
  long banks = 1;
  long rows = 1;
  long cols = 1;
  int address_bits = 32;
  std::vector<std::string> order = {"unused", "row", "bank", "col", "chip"};  // MSB first
};

std::vector<AddressField> address_decode(const AddressMap& map, std::uint64_t address);
std::uint64_t address_encode(const std::vector<AddressField>& fields);

}  // namespace vk
