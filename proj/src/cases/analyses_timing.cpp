#include <array>

#include "cases/common.hpp"
#include "vlsikit/timing.hpp"

namespace vk::cases {

namespace {

struct Arrival {
  double lo, hi;
};

std::map<std::string, Arrival> parse_clock(const Params& p) {
  std::map<std::string, Arrival> out;
  if (!p.has("clock")) return out;
  const json& c = p.raw("clock");
  if (!c.is_object()) p.bad("clock", "expected {register: arrival | [min, max]}");
  for (const auto& [name, v] : c.items()) {
    const std::string where = p.at("clock") + "." + name;
    if (v.is_array()) {
      if (v.size() != 2) throw ParamError(where, "expected [min, max]");
      Arrival a{Params::number_of(v[0], where), Params::number_of(v[1], where)};
      if (a.lo > a.hi) throw ParamError(where, "min exceeds max");
      out[name] = a;
    } else {
      double t = Params::number_of(v, where);
      out[name] = {t, t};
    }
  }
  return out;
}

const char* const kEdgeFields[] = {"t_cq_max", "t_cq_min", "d_max", "d_min", "t_setup", "t_hold"};

RegEdge parse_edge(const Params& e, const std::map<std::string, Arrival>& clock, const json& defaults) {
  e.only({"from", "to", "t_cq", "t_cq_max", "t_cq_min", "d", "d_max", "d_min", "t_setup", "t_hold", "skew",
          "skew_min", "skew_max"});
  RegEdge r;
  r.from = e.str("from", "");
  r.to = e.str("to", "");
  auto get = [&](const std::string& key, const std::string& alias) -> std::optional<double> {
    if (e.has(key)) return e.num(key);
    if (!alias.empty() && e.has(alias)) return e.num(alias);
    if (defaults.contains(key)) return Params::number_of(defaults[key], "params.defaults." + key);
    if (!alias.empty() && defaults.contains(alias))
      return Params::number_of(defaults[alias], "params.defaults." + alias);
    return std::nullopt;
  };
  r.t_cq_max = get("t_cq_max", "t_cq").value_or(0);
  r.t_cq_min = get("t_cq_min", "t_cq").value_or(r.t_cq_max);
  auto dmax = get("d_max", "d");
  if (!dmax) e.bad("d_max", "required field is missing");
  r.d_max = *dmax;
  r.d_min = get("d_min", "d").value_or(r.d_max);
  r.t_setup = get("t_setup", "").value_or(0);
  r.t_hold = get("t_hold", "").value_or(0);
  if (r.t_cq_min > r.t_cq_max) e.bad("t_cq_min", "exceeds t_cq_max");
  if (r.d_min > r.d_max) e.bad("d_min", "exceeds d_max");

  bool explicit_skew = e.has("skew") || e.has("skew_min") || e.has("skew_max");
  if (explicit_skew) {
    double s = e.num("skew", 0);
    r.skew_min = e.num("skew_min", s);
    r.skew_max = e.num("skew_max", s);
    if (r.skew_min > r.skew_max) e.bad("skew_min", "exceeds skew_max");
  } else if (!clock.empty()) {
    auto l = clock.find(r.from), c = clock.find(r.to);
    if (l == clock.end()) e.bad("from", "no clock arrival for '" + r.from + "'");
    if (c == clock.end()) e.bad("to", "no clock arrival for '" + r.to + "'");
    r.skew_min = c->second.lo - l->second.hi;
    r.skew_max = c->second.hi - l->second.lo;
  }
  return r;
}

}  // namespace

void register_timing(Registry& r) {
  r.add({"check_timing", "timing", "setup and hold slack of register-to-register paths",
         {{"period", "number", true, "clock period, s"},
          {"edges", "array", true,
           "[{from, to, t_cq_max, t_cq_min, d_max, d_min, t_setup, t_hold, skew | skew_min, skew_max}]"},
          {"clock", "object", false, "register -> arrival or [min, max]; gives skews when edges omit them"},
          {"defaults", "object", false, "edge fields shared by every edge"}},
         [](const Params& p) -> Runner {
           double period = p.positive("period");
           auto clock = parse_clock(p);
           json defaults = json::object();
           if (p.has("defaults")) {
             auto d = p.obj("defaults");
             d.only({"t_cq", "t_cq_max", "t_cq_min", "d", "d_max", "d_min", "t_setup", "t_hold"});
             defaults = p.raw("defaults");
           }
           std::vector<RegEdge> edges;
           for (const auto& e : p.objs("edges")) edges.push_back(parse_edge(e, clock, defaults));
           if (edges.empty()) p.bad("edges", "need at least one edge");
           return [=](Report& rep) {
             auto t = check_timing(edges, period);
             json list = json::array();
             for (std::size_t i = 0; i < edges.size(); ++i) {
               const auto& e = t.edges[i];
               list.push_back({{"from", edges[i].from},
                               {"to", edges[i].to},
                               {"setup_slack", quantity(e.setup_slack, "s")},
                               {"hold_slack", quantity(e.hold_slack, "s")},
                               {"min_period", quantity(e.min_period, "s")},
                               {"max_hold", quantity(e.max_hold, "s")},
                               {"setup", e.setup_slack < 0 ? "violated" : "met"},
                               {"hold", e.hold_slack < 0 ? "violated" : "met"}});
             }
             rep.set("edges", list);
             rep.q("worst_setup_slack", t.worst_setup_slack, "s");
             rep.q("worst_hold_slack", t.worst_hold_slack, "s");
             rep.q("min_period", t.min_period, "s");
             rep.q("f_max", 1.0 / t.min_period, "Hz");
             json mh = json::object();
             for (const auto& [k, v] : t.max_hold_by_register) mh[k] = quantity(v, "s");
             rep.set("max_hold_by_register", mh);
             rep.set("setup", t.worst_setup_slack < 0 ? "violated" : "met");
             rep.set("hold", t.worst_hold_slack < 0 ? "violated" : "met");
           };
         }});

  r.add({"pipeline_metrics", "timing", "clock period, frequency and latency of a register pipeline",
         {{"stage_delays", "array", true, "s"}, {"overhead", "number", false, "register overhead per stage, s"},
          {"items", "integer", false, "items pushed through (default 1)"}},
         [](const Params& p) -> Runner {
           auto d = p.nums("stage_delays");
           if (d.empty()) p.bad("stage_delays", "need at least one stage");
           double oh = p.num("overhead", 0);
           long n = p.integer("items", 1);
           if (n < 1) p.bad("items", "must be at least 1");
           return [=](Report& rep) {
             auto m = pipeline_metrics(d, oh, n);
             rep.q("period", m.period, "s");
             rep.q("f_max", m.f_max, "Hz");
             rep.q("latency", m.latency, "s");
             rep.q("total_time", m.total_time, "s");
           };
         }});

  r.add({"stages_for_period", "timing", "fewest equal pipeline stages meeting a target period",
         {{"comb_delay", "number", true, "s"}, {"overhead", "number", true, "s"}, {"target_period", "number", true, "s"}},
         [](const Params& p) -> Runner {
           double c = p.positive("comb_delay"), oh = p.num("overhead"), t = p.positive("target_period");
           return [=](Report& rep) {
             int n = stages_for_period(c, oh, t);
             rep.set("stages", n);
             rep.q("period", c / n + oh, "s");
           };
         }});

  r.add({"ripple_chain", "timing", "settling times along a ripple carry or borrow chain",
         {{"bits", "integer", true, ""},
          {"xy_to_s", "number", true, "s"}, {"xy_to_carry", "number", true, "s"},
          {"cin_to_s", "number", true, "s"}, {"cin_to_carry", "number", true, "s"}},
         [](const Params& p) -> Runner {
           long n = p.integer("bits");
           if (n < 1 || n > 4096) p.bad("bits", "must be in 1..4096");
           RippleArcs a{p.num("xy_to_s"), p.num("xy_to_carry"), p.num("cin_to_s"), p.num("cin_to_carry")};
           return [=](Report& rep) {
             auto res = ripple_chain(static_cast<int>(n), a);
             rep.set("sum", quantities(res.sum, "s"));
             rep.set("carry", quantities(res.carry, "s"));
             rep.q("critical", res.critical, "s");
           };
         }});

  auto parse_ring = [](const Params& p) {
    std::vector<RingStage> st;
    for (const auto& s : p.objs("stages")) {
      s.only({"t_plh", "t_phl"});
      st.push_back({s.positive("t_plh"), s.positive("t_phl")});
    }
    if (st.size() < 3 || st.size() % 2 == 0) p.bad("stages", "a ring needs an odd number (>= 3) of stages");
    return st;
  };

  r.add({"ring_analyze", "timing", "period and duty cycle at a node of a ring oscillator",
         {{"stages", "array", true, "[{t_plh, t_phl}] in ring order"},
          {"probe", "integer", true, "node index (output of that stage)"}},
         [parse_ring](const Params& p) -> Runner {
           auto st = parse_ring(p);
           long probe = p.integer("probe");
           if (probe < 0 || probe >= static_cast<long>(st.size())) p.bad("probe", "out of range");
           return [=](Report& rep) {
             auto a = ring_analyze(st, static_cast<int>(probe));
             rep.q("period", a.period, "s");
             rep.q("f", 1.0 / a.period, "Hz");
             rep.q("t_high", a.t_high, "s");
             rep.q("t_low", a.t_low, "s");
             rep.x("duty", a.duty);
           };
         }});

  r.add({"ring_transition", "timing", "first transition of a ring node after a stimulus",
         {{"stages", "array", true, "[{t_plh, t_phl}]"},
          {"start", "integer", false, "stage whose input is stimulated (default 0)"},
          {"input_rising", "boolean", true, "direction of the stimulus"},
          {"node", "integer", true, "observed stage output"},
          {"rising", "boolean", true, "direction sought at the node"},
          {"t_end", "number", false, "simulation horizon (default 4 periods)"}},
         [parse_ring](const Params& p) -> Runner {
           auto st = parse_ring(p);
           long start = p.integer("start", 0), node = p.integer("node");
           const long n = static_cast<long>(st.size());
           if (start < 0 || start >= n) p.bad("start", "out of range");
           if (node < 0 || node >= n) p.bad("node", "out of range");
           bool in_r = p.flag("input_rising", true), r_ = p.flag("rising", true);
           std::optional<double> horizon = p.opt_num("t_end");
           return [=](Report& rep) {
             double period = ring_analyze(st, 0).period;
             double t_end = horizon.value_or(4 * period);
             auto t = ring_first_transition(st, static_cast<int>(start), in_r, static_cast<int>(node), r_, t_end);
             rep.q("period", period, "s");
             rep.set("found", t.has_value());
             if (t) rep.q("time", *t, "s");
           };
         }});

  r.add({"ring_design", "timing", "uniform stage delays giving a period and duty cycle",
         {{"stages", "integer", true, "odd stage count"}, {"period", "number", true, "s"},
          {"duty", "number", true, "high fraction at a stage output"}},
         [](const Params& p) -> Runner {
           long n = p.integer("stages");
           if (n < 3 || n % 2 == 0) p.bad("stages", "must be odd and at least 3");
           double t = p.positive("period"), d = p.num("duty");
           if (!(d > 0 && d < 1)) p.bad("duty", "must lie in (0, 1)");
           return [=](Report& rep) {
             auto s = ring_design(static_cast<int>(n), t, d);
             rep.q("t_plh", s.t_plh, "s");
             rep.q("t_phl", s.t_phl, "s");
             if (s.t_plh <= 0 || s.t_phl <= 0) rep.warn("requested duty needs a non-positive stage delay");
           };
         }});

  r.add({"latch_constraints", "timing", "time-borrowing setup inequalities of a two-phase latch pipeline",
         {{"stage_delays", "array", true, "worst-case stage delays"},
          {"min_delays", "array", false, "contamination delays; enables hold checks"},
          {"duty", "number", false, "phase high fraction (default 0.5)"},
          {"t_cq", "number", false, ""}, {"t_dq", "number", false, ""}, {"t_dc", "number", false, ""},
          {"t_cd", "number", false, ""}, {"skew", "number", false, ""},
          {"periodic", "boolean", false, "stage list repeats without end (default false)"}},
         [](const Params& p) -> Runner {
           LatchPipeline lp;
           lp.stage_delays = p.nums("stage_delays");
           if (lp.stage_delays.empty()) p.bad("stage_delays", "need at least one stage");
           if (p.has("min_delays")) {
             lp.min_delays = p.nums("min_delays");
             if (lp.min_delays.size() != lp.stage_delays.size())
               p.bad("min_delays", "must match stage_delays in length");
           }
           lp.duty = p.num("duty", 0.5);
           if (!(lp.duty > 0 && lp.duty < 1)) p.bad("duty", "must lie in (0, 1)");
           lp.t_cq = p.num("t_cq", 0);
           lp.t_dq = p.num("t_dq", 0);
           lp.t_dc = p.num("t_dc", 0);
           lp.t_cd = p.num("t_cd", 0);
           lp.skew = p.num("skew", 0);
           lp.periodic = p.flag("periodic", false);
           return [=](Report& rep) {
             auto res = latch_constraints(lp);
             json set = json::array();
             std::vector<std::string> text;
             for (const auto& q : res.setup) {
               set.push_back({{"first", q.first}, {"last", q.last}, {"window", plain(q.window)}, {"text", q.text}});
               text.push_back(q.text);
             }
             rep.set("setup", set);
             rep.set("setup_text", text);
             rep.set("hold", res.hold);
             rep.x("min_period", res.min_period);
             if (!lp.min_delays.empty()) rep.set("hold_ok", res.hold_ok);
           };
         }});

  r.add({"dff_margins", "timing", "setup and hold of a six-NAND edge-triggered flip-flop",
         {{"gate_delays", "array", true, "six NAND delays, gate 1 first"}},
         [](const Params& p) -> Runner {
           auto d = p.nums("gate_delays");
           if (d.size() != 6) p.bad("gate_delays", "expected six delays");
           std::array<double, 6> a{};
           std::copy(d.begin(), d.end(), a.begin());
           return [=](Report& rep) {
             auto m = dff_margins(a);
             rep.x("setup", m.setup);
             rep.x("hold", m.hold);
           };
         }});
}

}  // namespace vk::cases
