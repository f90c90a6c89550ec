#include "vlsikit/timing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "vlsikit/error.hpp"

namespace vk {

TimingReport check_timing(const std::vector<RegEdge>& edges, double period) {
  require(!edges.empty(), "no register edges");
  require(period > 0, "period must be positive");
  TimingReport r{};
  r.worst_setup_slack = r.worst_hold_slack = std::numeric_limits<double>::infinity();
  r.min_period = 0;
  for (const auto& e : edges) {
    require(e.d_min <= e.d_max, "edge " + e.from + "->" + e.to + ": d_min exceeds d_max");
    require(e.t_cq_min <= e.t_cq_max, "edge " + e.from + "->" + e.to + ": t_cq_min exceeds t_cq_max");
    require(e.skew_min <= e.skew_max, "edge " + e.from + "->" + e.to + ": skew range inverted");
    EdgeTiming t{};
    double arrival = e.t_cq_max + e.d_max + e.t_setup;
    t.setup_slack = period + e.skew_min - arrival;
    t.min_period = arrival - e.skew_min;
    t.max_hold = e.t_cq_min + e.d_min - e.skew_max;
    t.hold_slack = t.max_hold - e.t_hold;
    r.worst_setup_slack = std::min(r.worst_setup_slack, t.setup_slack);
    r.worst_hold_slack = std::min(r.worst_hold_slack, t.hold_slack);
    r.min_period = std::max(r.min_period, t.min_period);
    auto [it, fresh] = r.max_hold_by_register.emplace(e.to, t.max_hold);
    if (!fresh) it->second = std::min(it->second, t.max_hold);
    r.edges.push_back(t);
  }
  return r;
}

PipelineMetrics pipeline_metrics(const std::vector<double>& stage_delays, double overhead,
                                 long n_items) {
  require(!stage_delays.empty(), "pipeline needs at least one stage");
  require(overhead >= 0 && n_items >= 1, "overhead must be >= 0 and items >= 1");
  for (double d : stage_delays) require(d >= 0, "stage delays must be non-negative");
  PipelineMetrics m{};
  m.period = *std::max_element(stage_delays.begin(), stage_delays.end()) + overhead;
  require(m.period > 0, "pipeline period is zero");
  m.f_max = 1 / m.period;
  const double n = static_cast<double>(stage_delays.size());
  m.latency = n * m.period;
  m.total_time = (static_cast<double>(n_items) + n - 1) * m.period;
  return m;
}

int stages_for_period(double comb_delay, double overhead, double target_period) {
  require(comb_delay > 0 && overhead >= 0, "delays must be positive");
  if (target_period <= overhead)
    fail(ErrorKind::Infeasible, "register overhead alone meets or exceeds the target period");
  // comb/n + overhead < target  <=>  n > comb / (target - overhead)
  double bound = comb_delay / (target_period - overhead);
  int n = static_cast<int>(std::floor(bound)) + 1;
  return std::max(n, 1);
}

RippleResult ripple_chain(int n_bits, const RippleArcs& a) {
  require(n_bits >= 1, "need at least one bit");
  require(a.xy_to_s >= 0 && a.xy_to_carry >= 0 && a.cin_to_s >= 0 && a.cin_to_carry >= 0,
          "arc delays must be non-negative");
  RippleResult r{};
  double carry_in = 0;
  for (int i = 0; i < n_bits; ++i) {
    r.sum.push_back(std::max(a.xy_to_s, carry_in + a.cin_to_s));
    r.carry.push_back(std::max(a.xy_to_carry, carry_in + a.cin_to_carry));
    carry_in = r.carry.back();
  }
  r.critical = std::max(*std::max_element(r.sum.begin(), r.sum.end()), r.carry.back());
  return r;
}

namespace {

void check_ring(const std::vector<RingStage>& s) {
  require(s.size() % 2 == 1, "ring needs an odd number of stages");
  for (const auto& st : s) require(st.t_plh >= 0 && st.t_phl >= 0, "stage delays must be non-negative");
}

}  // namespace

RingAnalysis ring_analyze(const std::vector<RingStage>& stages, int probe) {
  check_ring(stages);
  const int n = static_cast<int>(stages.size());
  require(probe >= 0 && probe < n, "probe node out of range");
  RingAnalysis a{};
  // a rising edge at the probe returns as a falling edge after one lap;
  // odd offsets around the lap see falling outputs
  for (int j = 1; j <= n; ++j) {
    const auto& st = stages[(probe + j) % n];
    bool odd = j % 2 == 1;
    a.t_high += odd ? st.t_phl : st.t_plh;
    a.t_low += odd ? st.t_plh : st.t_phl;
  }
  a.period = a.t_high + a.t_low;
  require(a.period > 0, "ring has zero delay");
  a.duty = a.t_high / a.period;
  return a;
}

std::vector<RingEvent> ring_simulate(const std::vector<RingStage>& stages, int start,
                                     bool input_rising, double t_end) {
  check_ring(stages);
  const int n = static_cast<int>(stages.size());
  require(start >= 0 && start < n, "start stage out of range");
  std::vector<RingEvent> ev{{0.0, (start + n - 1) % n, input_rising}};
  double t = 0;
  int node = ev.front().node;
  bool rising = input_rising;
  for (;;) {
    node = (node + 1) % n;
    rising = !rising;
    const auto& st = stages[node];
    double d = rising ? st.t_plh : st.t_phl;
    t += d;
    if (t > t_end) break;
    ev.push_back({t, node, rising});
    if (ev.size() > 10'000'000) fail(ErrorKind::Size, "ring trace too long");
  }
  return ev;
}

std::optional<double> ring_first_transition(const std::vector<RingStage>& stages, int start,
                                             bool input_rising, int node, bool rising,
                                             double t_end) {
  require(node >= 0 && node < static_cast<int>(stages.size()), "node out of range");
  auto ev = ring_simulate(stages, start, input_rising, t_end);
  for (std::size_t i = 1; i < ev.size(); ++i)
    if (ev[i].node == node && ev[i].rising == rising) return ev[i].time;
  return std::nullopt;
}

RingStage ring_design(int n_stages, double period, double duty) {
  require(n_stages >= 1 && n_stages % 2 == 1, "ring needs an odd number of stages");
  require(period > 0 && duty > 0 && duty < 1, "need period > 0 and 0 < duty < 1");
  const double N = (n_stages - 1) / 2.0;
  RingStage s{((N + 1) * (1 - duty) - N * duty) * period / n_stages,
              ((N + 1) * duty - N * (1 - duty)) * period / n_stages};
  if (s.t_plh <= 0 || s.t_phl <= 0)
    fail(ErrorKind::Infeasible, "duty cycle unreachable with positive stage delays");
  return s;
}

namespace {

std::string fmt_coeff(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", std::round(v * 1e9) / 1e9);
  return buf;
}

}  // namespace

LatchResult latch_constraints(const LatchPipeline& p) {
  const int n = static_cast<int>(p.stage_delays.size());
  require(n >= 1, "latch pipeline needs at least one stage");
  require(p.duty > 0 && p.duty < 1, "duty must lie in (0, 1)");
  require(p.min_delays.empty() || static_cast<int>(p.min_delays.size()) == n,
          "min delays must match stage count");
  for (double d : p.stage_delays) require(d >= 0, "stage delays must be non-negative");

  // latch k sits before stage k+1; even latches share the phase of latch 0
  auto open = [&](int k) { return k % 2 == 0 ? k / 2 : (k - 1) / 2 + p.duty; };
  auto close = [&](int k) { return k % 2 == 0 ? k / 2 + p.duty : (k + 1) / 2.0; };

  std::vector<double> prefix(n + 1, 0.0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + p.stage_delays[i];

  LatchResult r{};
  r.min_period = 0;
  for (int len = 1; len <= n; ++len) {
    for (int i = 1; i + len - 1 <= n; ++i) {
      int j = i + len - 1;
      LatchInequality q{i, j, close(j) - open(i - 1), ""};
      double lhs = prefix[j] - prefix[i - 1] + p.t_cq + (len - 1) * p.t_dq;
      r.min_period = std::max(r.min_period, (lhs + p.t_dc + p.skew) / q.window);
      for (int k = i; k <= j; ++k) q.text += "D" + std::to_string(k) + " + ";
      q.text += "D_CQ";
      if (len > 1) q.text += " + " + (len > 2 ? std::to_string(len - 1) : std::string()) + "D_DQ";
      std::string w = fmt_coeff(q.window);
      q.text += " <= " + (w == "1" ? std::string() : w) + "T - D_DC - t_skew";
      r.setup.push_back(std::move(q));
    }
  }
  if (p.periodic) {
    // each stage adds half a period of window on average, while the fixed
    // latch overheads are spread over an ever longer run
    r.min_period = std::max(r.min_period, 2 * (prefix[n] + n * p.t_dq) / n);
  }
  r.hold_ok = true;
  for (std::size_t i = 0; i < p.min_delays.size(); ++i) {
    // complementary phases: the next latch closes as this one opens
    r.hold.push_back("d" + std::to_string(i + 1) + " + D_CQ >= D_CD + t_skew");
    if (p.min_delays[i] + p.t_cq < p.t_cd + p.skew) r.hold_ok = false;
  }
  return r;
}

FlipFlopMargins dff_margins(const std::array<double, 6>& t) {
  for (double v : t) require(v >= 0, "gate delays must be non-negative");
  return {t[3] + t[0], std::max(t[1], t[2])};
}

}  // namespace vk
