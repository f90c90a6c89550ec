#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vlsikit/logic.hpp"

namespace vk {

// Series-parallel switch network. A network hangs between the output node
// and a rail; the first child of a series node sits at the output end.
struct SpNetwork {
  enum class Kind { Switch, Series, Parallel };

  Kind kind = Kind::Switch;
  std::string input;
  bool complemented = false;
  int leaf = -1;       // shared by a switch and its dual
  double width = 0;
  std::vector<SpNetwork> children;

  static SpNetwork sw(std::string input, double width, bool complemented = false);
  static SpNetwork series(std::vector<SpNetwork> kids);
  static SpNetwork parallel(std::vector<SpNetwork> kids);

  std::string literal() const { return complemented ? input + "'" : input; }
};

// Build the pull-down network realizing `f` (AND -> series, OR -> parallel,
// literals only), with unit widths and leaf ids in order of appearance.
SpNetwork network_from_expr(const BoolExpr& f);
SpNetwork dual(const SpNetwork& n);

// nmos network: conducts when the literal is 1; pmos: when it is 0.
bool evaluate_network(const SpNetwork& n, const std::map<std::string, bool>& assignment,
                      bool pmos = false);

// Reference inverter widths. w_p <= 0 means mu * w_n (equal rise and fall).
struct GateReference {
  double w_n = 1;
  double w_p = 0;
};

enum class PullUp { Complementary, PseudoNmos };

// Resistances in units of a width-1 nmos; pmos of width w is mu / w.
struct CompoundGate {
  SpNetwork pdn;
  SpNetwork pun;
  PullUp pull_up = PullUp::Complementary;
  double mu = 2;
  GateReference ref;
  std::vector<std::string> inputs;

  double ref_wp() const { return ref.w_p > 0 ? ref.w_p : mu * ref.w_n; }
  double total_width() const;
  double area_ratio() const;  // total transistor width over the reference inverter's
};

// Complementary gate whose pull-down realizes `pulldown_fn` (the complement of
// the output). Every conducting path is sized to the reference resistance.
CompoundGate compound_gate(const BoolExpr& pulldown_fn, GateReference ref = {}, double mu = 2);

// Gate with explicit widths already set on both networks.
CompoundGate sized_gate(SpNetwork pdn, SpNetwork pun, GateReference ref, double mu);

// Ratioed gate: pull-down `pdn` with widths set, always-on pmos load of `load_width`.
CompoundGate pseudo_nmos_gate(SpNetwork pdn, double load_width, GateReference ref, double mu);

// Sum of widths per literal leaf, and the pull-down/pull-up resistance of the
// network under an assignment (infinity when off).
double network_resistance(const SpNetwork& n, const std::map<std::string, bool>& assignment,
                          bool pmos, double mu);

// Extreme pull-down/pull-up resistances over all input assignments, in units
// of the reference inverter's resistance. Multiply by R*C_L for delay.
struct DelayBounds {
  double worst_fall;
  double best_fall;
  double worst_rise;
  double best_rise;
};
DelayBounds delay_bounds(const CompoundGate& g);

// Gate ordering with one unbroken diffusion strip in both networks. The
// returned networks carry the series-child order that makes the walk valid.
struct EulerOrdering {
  std::vector<std::string> sequence;  // literal names
  std::vector<int> leaves;            // leaf ids, same order
  SpNetwork pdn;
  SpNetwork pun;
};
std::optional<EulerOrdering> common_euler_ordering(const CompoundGate& g);

// Diffusion graph of a network: vertex 0 is the output, 1 the rail.
struct DiffusionGraph {
  struct Edge {
    int a, b, leaf;
  };
  int vertices = 2;
  std::vector<Edge> edges;
};
DiffusionGraph diffusion_graph(const SpNetwork& n);

// Output voltage after a precharged node at v_dd shares charge with
// discharged (or v_init) internal capacitances.
double charge_share_voltage(double c_out, double v_dd, const std::vector<double>& c_exposed,
                            double v_init = 0);

}  // namespace vk
