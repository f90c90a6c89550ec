#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vlsikit/logic.hpp"

namespace vk {

// Exact probability that `f` is 1 for independent inputs; at most 24 inputs.
double signal_probability(const BoolExpr& f, const std::map<std::string, double>& p_inputs);

// Transitions per cycle of a node with signal probability p, counting both
// edges: 2 p (1 - p).
double activity(double p);

struct LoadPoint {
  std::string name;
  double c;
  double beta;  // transitions per cycle, both edges
};

struct SwitchingPower {
  double total;
  std::vector<double> per_node;
};

// 1/2 * C * V^2 * f * beta summed over the nodes.
SwitchingPower switching_power(const std::vector<LoadPoint>& nodes, double v_dd, double f);

// Short-circuit power of a symmetric inverter driven by a linear ramp of
// duration tau_in: each input edge dissipates k/24 * (v_dd - 2 v_t)^3 * tau_in.
struct ShortCircuit {
  double energy_per_edge;
  double power;
};
ShortCircuit short_circuit_power(double k, double v_dd, double v_t, double tau_in, double f,
                                 double beta);

struct VoltageScaling {
  double switching;      // (v_from / v_to)^2
  double short_circuit;  // v (v - 2 v_t)^e ratio
};
VoltageScaling voltage_scaling_factors(double v_from, double v_to, double v_t,
                                       double sc_exponent = 2.0);

// Off-state leakage of a two-high stack relative to a single device, from the
// intermediate node voltage that balances the two subthreshold currents.
struct StackLeakage {
  double v_x;
  double ratio;
};
StackLeakage leakage_stack(double v_dd, double dibl, double swing);

// Energy dissipated charging C through R with a ramp of duration T.
double adiabatic_energy(double r_on, double c, double v, double t_ramp);

// Percent saving from splitting an N-bit bus into m segments when `locality`
// of the traffic stays within a segment, and the m that maximizes it.
struct BusSplit {
  double saving_pct;
  double m_opt;
  double saving_at_opt_pct;
};
BusSplit bus_split(int n_bits, double m, double locality);

struct GrayCount {
  long binary;
  long gray;
  long saved;
};
GrayCount gray_code(const std::vector<std::uint64_t>& sequence, int width);
std::uint64_t to_gray(std::uint64_t b);

}  // namespace vk
