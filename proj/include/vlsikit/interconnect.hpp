#pragma once

#include <string>
#include <vector>

#include "vlsikit/device.hpp"

namespace vk {

inline constexpr double kTauScale = 1.0;
inline constexpr double kLn2Scale = 0.69;

// RC tree rooted at node 0 (the driver output). Each other node hangs off
// its parent through resistance `r` and carries grounded capacitance `c`.
class RcTree {
 public:
  struct Node {
    int parent;
    double r;
    double c;
    std::string name;
  };

  explicit RcTree(double root_c = 0, std::string root_name = "root");

  int add(int parent, double r, double c, std::string name = "");
  int find(const std::string& name) const;
  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

 private:
  std::vector<Node> nodes_;
};

// Elmore delay to `sink`, multiplied by `scale`. Evaluated both as a sum over
// path resistances times downstream capacitance and as a sum over node
// capacitances times shared path resistance; the two must agree.
double elmore(const RcTree& tree, int sink, double scale = kTauScale);
std::vector<double> elmore_all(const RcTree& tree, double scale = kTauScale);

struct WireGeometry {
  double length = 0;
  double width = 0;
  double r_sheet = 0;              // ohm/square
  double c_area = 0;               // F/m^2
  double c_fringe_per_edge = 0;    // F/m
  int fringe_edges = 2;
};

struct WireRc {
  double r;
  double c;
};

WireRc wire_rc(const WireGeometry& w);

// A stage driving a wire segment: either a fixed delay with no loading, or a
// switch resistance with output diffusion and input gate capacitance.
struct DriverModel {
  enum class Kind { FixedDelay, Rc };
  Kind kind = Kind::FixedDelay;
  double delay = 0;
  double r = 0;
  double c_out = 0;
  double c_in = 0;

  static DriverModel fixed(double d) { return {Kind::FixedDelay, d, 0, 0, 0}; }
  static DriverModel rc(double r, double c_out, double c_in) { return {Kind::Rc, 0, r, c_out, c_in}; }
};

struct BufferedWire {
  double r_wire = 0;
  double c_wire = 0;
  DriverModel driver = DriverModel::fixed(0);
  DriverModel buffer = DriverModel::fixed(0);
  double c_load = 0;
  double scale = kTauScale;  // applied to RC products only
  int n_min = 0;
  int n_max = 10;
};

struct BufferedWireResult {
  std::vector<double> delay;  // index i is n_min + i buffers
  int best_n;
  double best_delay;
};

BufferedWireResult buffered_wire_delay(const BufferedWire& spec);
double buffered_wire_delay(const BufferedWire& spec, int n);

struct ChainPlan {
  double alpha;           // per-stage fanout solving a(ln a - 1) = cd/cg
  double stages_exact;    // ln f / ln a
  int inverters;          // stages_exact rounded up, at least 1
  int delay_optimal;      // integer stage count minimizing N(f^(1/N) + cd/cg)
};

ChainPlan inverter_chain_plan(double cd_over_cg, double fanout);

enum class SlewMethod { Acc, Diff, AvgCurrent };

// Time for a device with |V_GS| = v_dd to move its output through the
// |V_DS| window [to_pct, from_pct] * v_dd while discharging c_load.
double output_slew(const MosDevice& dev, double c_load, double v_dd, double from_pct,
                   double to_pct, SlewMethod method);

// Charge-based estimate: C * dV / I.
double avg_current_slew(double c_load, double delta_v, double i_avg);

}  // namespace vk
