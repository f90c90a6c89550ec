#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vlsikit/gates.hpp"

namespace vk {

struct InputEffort {
  std::string input;  // literal name
  double c_in = 0;    // in units of unit-width gate capacitance
  double g_rise = 0, g_fall = 0;
  double p_rise = 0, p_fall = 0;
};

struct GateTemplate {
  std::string name;
  std::vector<InputEffort> inputs;
  double c_parasitic = 0;
  double p_rise = 0, p_fall = 0;  // worst over inputs
  bool inverting = true;

  const InputEffort& input(const std::string& literal) const;
};

// Logical and parasitic effort of every input relative to `reference`,
// counting only devices that switch the output for that input.
GateTemplate derive_template(const CompoundGate& gate, const CompoundGate& reference,
                             double cd_over_cg = 1.0, std::string name = "");

// Reference inverter as a gate.
CompoundGate inverter_gate(GateReference ref = {}, double mu = 2);

enum class GateFamily { Nand, Nor };
struct NandNorEffort {
  double g_input;
  double g_total;
  double p;
};
NandNorEffort nand_nor_effort(GateFamily family, int n, double mu);

enum class Edge { Rise, Fall, Mean };

struct PathStage {
  std::string name;
  double g = 1;
  double p = 1;
  double b = 1;  // branching at this stage's output
  bool inverting = true;
};

PathStage stage_from(const GateTemplate& t, const std::string& literal, Edge edge, double b = 1);

struct PathSpec {
  std::vector<PathStage> stages;
  double c_in = 1;
  double c_load = 1;
};

struct PathResult {
  double G, B, H, F, P;
  int N;
  double f_hat;
  double delay;
  std::vector<double> c_in;   // input capacitance of each stage for minimum delay
  std::vector<double> stage_delay;
};

PathResult path_delay(const PathSpec& path);

enum class OutputPolarity { Any, Inverting, NonInverting };

struct OptimizeOptions {
  double rho = 3.59;
  OutputPolarity polarity = OutputPolarity::Any;
  bool add_inverters = true;
  double p_inv = 1;
};

struct OptimizedPath {
  PathSpec path;
  PathResult result;
  std::vector<std::pair<int, double>> candidates;  // (stages, delay)
};

// Pads the path with inverters at its output when that lowers the delay.
OptimizedPath optimize_path(const PathSpec& path, const OptimizeOptions& opts = {});

// Index of the lowest-delay alternative, with every alternative's result.
std::pair<std::size_t, std::vector<PathResult>> compare_paths(const std::vector<PathSpec>& paths);

// Complementary-output fork of inverters: a long branch of m+1 stages and a
// short branch of m stages share the input capacitance budget.
struct ForkSpec {
  double c_in_total = 0;
  double load_long = 0;
  double load_short = 0;
  double p_inv = 1;
  double rho = 3.59;
  std::optional<int> m;
};

struct ForkResult {
  int m;
  double x;  // input capacitance of the long branch
  double y;  // input capacitance of the short branch
  double delay;
  std::vector<double> long_caps;   // from branch input to last stage
  std::vector<double> short_caps;
  std::vector<std::pair<int, double>> candidates;
};

ForkResult design_fork(const ForkSpec& spec);

}  // namespace vk
