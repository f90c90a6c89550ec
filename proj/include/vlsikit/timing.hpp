#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vk {

// Register-to-register path. Skew is capture clock arrival minus launch
// clock arrival; setup checks use its smallest value, hold its largest.
struct RegEdge {
  std::string from, to;
  double t_cq_max = 0, t_cq_min = 0;
  double d_max = 0, d_min = 0;
  double t_setup = 0, t_hold = 0;
  double skew_min = 0, skew_max = 0;
};

struct EdgeTiming {
  double setup_slack;
  double hold_slack;
  double min_period;  // period at which setup slack is zero
  double max_hold;    // hold time at which hold slack is zero
};

struct TimingReport {
  std::vector<EdgeTiming> edges;
  double worst_setup_slack;
  double worst_hold_slack;
  double min_period;
  std::map<std::string, double> max_hold_by_register;  // tightest over edges captured there
};

TimingReport check_timing(const std::vector<RegEdge>& edges, double period);

struct PipelineMetrics {
  double period;
  double f_max;
  double latency;        // one item through all stages
  double total_time;     // n_items through a filled pipe
};

PipelineMetrics pipeline_metrics(const std::vector<double>& stage_delays, double overhead,
                                 long n_items);

// Fewest equal stages with comb/n + overhead strictly under the target period.
int stages_for_period(double comb_delay, double overhead, double target_period);

struct RippleArcs {
  double xy_to_s = 0, xy_to_carry = 0;
  double cin_to_s = 0, cin_to_carry = 0;
};

struct RippleResult {
  std::vector<double> sum;
  std::vector<double> carry;
  double critical;
};

// All operand bits and the carry-in change at t = 0.
RippleResult ripple_chain(int n_bits, const RippleArcs& arcs);

struct RingStage {
  double t_plh;
  double t_phl;
};

struct RingAnalysis {
  double period;
  double t_high;
  double t_low;
  double duty;
};

// Stage i inverts node i-1 (mod n) onto node i.
RingAnalysis ring_analyze(const std::vector<RingStage>& stages, int probe);

struct RingEvent {
  double time;
  int node;
  bool rising;
};

// Event trace of a ring after the input of stage `start` makes the given
// transition at t = 0, up to `t_end`.
std::vector<RingEvent> ring_simulate(const std::vector<RingStage>& stages, int start,
                                     bool input_rising, double t_end);

// Time of the first transition of the given direction at `node`, if any
// occurs before `t_end`.
std::optional<double> ring_first_transition(const std::vector<RingStage>& stages, int start,
                                             bool input_rising, int node, bool rising,
                                             double t_end);

// Uniform-stage ring (n = 2N+1) meeting a period and duty at a stage output.
RingStage ring_design(int n_stages, double period, double duty);

struct LatchPipeline {
  std::vector<double> stage_delays;   // worst-case combinational delay per stage
  std::vector<double> min_delays;     // optional; enables hold checks
  double duty = 0.5;                  // high fraction of the phase of latch 0
  double t_cq = 0, t_dq = 0, t_dc = 0, t_cd = 0, skew = 0;
  bool periodic = false;              // stage list repeats without end
};

struct LatchInequality {
  int first, last;      // stage range, 1-based inclusive
  double window;        // multiple of T available to the run
  std::string text;
};

struct LatchResult {
  std::vector<LatchInequality> setup;
  std::vector<std::string> hold;
  double min_period;
  bool hold_ok;
};

// Latches alternate phase; a run of stages i..j borrows time through the
// transparent latches between them.
LatchResult latch_constraints(const LatchPipeline& p);

struct FlipFlopMargins {
  double setup;
  double hold;
};

// Six-NAND edge-triggered flip-flop, gate delays indexed from gate 1:
// a conservative setup covers the data-input gate and the gate it feeds,
// hold covers the slower of the two gates released by the clock.
FlipFlopMargins dff_margins(const std::array<double, 6>& gate_delays);

}  // namespace vk
