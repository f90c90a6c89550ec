#include <algorithm>

#include "cases/common.hpp"
#include "vlsikit/error.hpp"
#include "vlsikit/logic.hpp"
#include "vlsikit/power.hpp"

namespace vk::cases {

namespace {

BoolExpr expr_of(const Params& p, const std::string& key) {
  try {
    return parse_expr(p.str(key));
  } catch (const vk::Error& e) {
    p.bad(key, e.what());
  }
}

std::map<std::string, double> parse_probs(const Params& p, const std::string& key) {
  std::map<std::string, double> m;
  if (!p.has(key)) return m;
  const json& j = p.raw(key);
  if (!j.is_object()) p.bad(key, "expected {input: probability}");
  for (const auto& [k, v] : j.items()) {
    double x = Params::number_of(v, p.at(key) + "." + k);
    if (x < 0 || x > 1) throw ParamError(p.at(key) + "." + k, "probability must lie in [0, 1]");
    m[k] = x;
  }
  return m;
}

}  // namespace

void register_power(Registry& r) {
  r.add({"signal_probability", "power", "probability and activity of a Boolean node",
         {{"expr", "string", true, "node function"},
          {"inputs", "object", false, "input -> probability of 1 (default 0.5 each)"}},
         [](const Params& p) -> Runner {
           auto f = expr_of(p, "expr");
           auto probs = parse_probs(p, "inputs");
           for (const auto& v : variables(f)) probs.emplace(v, 0.5);
           if (variables(f).size() > 24) p.bad("expr", "at most 24 inputs");
           return [=](Report& rep) {
             double pr = signal_probability(f, probs);
             rep.x("p", pr);
             rep.x("activity", activity(pr));
           };
         }});

  r.add({"switching_power", "power", "dynamic power 1/2 C V^2 f beta over a set of nodes",
         {{"v_dd", "number", true, "V"}, {"f", "number", true, "Hz"},
          {"nodes", "array", true, "[{name, group, c, beta | p | expr}]"},
          {"inputs", "object", false, "input probabilities for expr nodes (default 0.5)"},
          {"ratio", "array", false, "[group, group]: report the power of the first over the second"}},
         [](const Params& p) -> Runner {
           double v = p.positive("v_dd"), f = p.positive("f");
           auto probs = parse_probs(p, "inputs");
           std::vector<LoadPoint> nodes;
           std::vector<std::optional<double>> node_p;
           std::vector<std::string> groups;
           for (const auto& n : p.objs("nodes")) {
             n.only({"name", "group", "c", "beta", "p", "expr"});
             groups.push_back(n.str("group", ""));
             LoadPoint lp{n.str("name", "n" + std::to_string(nodes.size())), n.num("c"), 0};
             if (lp.c < 0) n.bad("c", "must be non-negative");
             int given = n.has("beta") + n.has("p") + n.has("expr");
             if (given != 1) n.bad("", "give exactly one of beta, p, expr");
             std::optional<double> pr;
             if (n.has("beta")) {
               lp.beta = n.num("beta");
             } else if (n.has("p")) {
               pr = n.num("p");
               if (*pr < 0 || *pr > 1) n.bad("p", "must lie in [0, 1]");
             } else {
               auto e = expr_of(n, "expr");
               auto local = probs;
               for (const auto& x : variables(e)) local.emplace(x, 0.5);
               pr = signal_probability(e, local);
             }
             if (pr) lp.beta = activity(*pr);
             nodes.push_back(lp);
             node_p.push_back(pr);
           }
           std::vector<std::string> ratio;
           if (p.has("ratio")) {
             ratio = p.strs("ratio");
             if (ratio.size() != 2) p.bad("ratio", "expected two group names");
             for (const auto& g : ratio)
               if (std::find(groups.begin(), groups.end(), g) == groups.end())
                 p.bad("ratio", "no node belongs to group '" + g + "'");
           }
           return [=](Report& rep) {
             auto sp = switching_power(nodes, v, f);
             json per = json::object();
             for (std::size_t i = 0; i < nodes.size(); ++i) {
               json e{{"beta", plain(nodes[i].beta)}, {"power", quantity(sp.per_node[i], "W")}};
               if (node_p[i]) e["p"] = plain(*node_p[i]);
               per[nodes[i].name] = e;
             }
             rep.set("nodes", per);
             rep.q("total", sp.total, "W");
             std::map<std::string, double> by_group;
             for (std::size_t i = 0; i < nodes.size(); ++i)
               if (!groups[i].empty()) by_group[groups[i]] += sp.per_node[i];
             if (!by_group.empty()) {
               json g = json::object();
               for (const auto& [name, w] : by_group) g[name] = quantity(w, "W");
               rep.set("groups", g);
             }
             if (!ratio.empty()) {
               if (by_group.at(ratio[1]) == 0) fail(ErrorKind::Domain, "ratio denominator group dissipates nothing");
               rep.x("ratio", by_group.at(ratio[0]) / by_group.at(ratio[1]));
             }
           };
         }});

  r.add({"short_circuit_power", "power", "short-circuit dissipation of a symmetric inverter under a ramp input",
         {{"k", "number", true, "device transconductance k' W/L, A/V^2"}, {"v_dd", "number", true, "V"},
          {"v_t", "number", true, "threshold magnitude, V"}, {"tau_in", "number", true, "input ramp time, s"},
          {"f", "number", true, "Hz"}, {"beta", "number", false, "input edges per cycle (default 2)"}},
         [](const Params& p) -> Runner {
           double k = p.positive("k"), v = p.positive("v_dd"), vt = p.num("v_t"), tau = p.positive("tau_in");
           double f = p.positive("f"), beta = p.num("beta", 2);
           return [=](Report& rep) {
             auto s = short_circuit_power(k, v, vt, tau, f, beta);
             rep.q("energy_per_edge", s.energy_per_edge, "J");
             rep.q("power", s.power, "W");
           };
         }});

  r.add({"voltage_scaling", "power", "reduction factors of switching and short-circuit power with supply",
         {{"v_from", "number", true, "V"}, {"v_to", "number", true, "V"}, {"v_t", "number", false, "V"},
          {"sc_exponent", "number", false, "exponent of (V - 2 V_T) (default 2)"}},
         [](const Params& p) -> Runner {
           double a = p.positive("v_from"), b = p.positive("v_to"), vt = p.num("v_t", 0);
           double e = p.num("sc_exponent", 2);
           return [=](Report& rep) {
             auto s = voltage_scaling_factors(a, b, vt, e);
             rep.x("switching", s.switching);
             rep.x("short_circuit", s.short_circuit);
           };
         }});

  r.add({"leakage_stack", "power", "stack effect on subthreshold leakage of two series devices",
         {{"v_dd", "number", true, "V"}, {"dibl", "number", true, "DIBL coefficient"},
          {"swing", "number", true, "subthreshold swing, V/decade"}},
         [](const Params& p) -> Runner {
           double v = p.positive("v_dd"), l = p.num("dibl"), s = p.positive("swing");
           if (l < 0) p.bad("dibl", "must be non-negative");
           return [=](Report& rep) {
             auto st = leakage_stack(v, l, s);
             rep.q("v_x", st.v_x, "V");
             rep.x("ratio", st.ratio);
             rep.x("log10_ratio", std::log10(st.ratio));
           };
         }});

  r.add({"adiabatic_energy", "power", "energy of ramped charging through a resistance",
         {{"r", "number", true, "ohm"}, {"c", "number", true, "F"}, {"v", "number", true, "V"},
          {"t_ramp", "number", true, "s"}},
         [](const Params& p) -> Runner {
           double res = p.positive("r"), c = p.positive("c"), v = p.positive("v"), t = p.positive("t_ramp");
           return [=](Report& rep) {
             rep.q("energy", adiabatic_energy(res, c, v, t), "J");
             rep.q("conventional", 0.5 * c * v * v, "J");
           };
         }});

  r.add({"bus_split", "power", "saving from splitting a bus into segments",
         {{"bits", "integer", true, ""}, {"segments", "number", true, ""},
          {"locality", "number", true, "fraction of traffic staying in a segment"}},
         [](const Params& p) -> Runner {
           long n = p.integer("bits");
           if (n < 1) p.bad("bits", "must be positive");
           double m = p.positive("segments"), loc = p.num("locality");
           if (loc < 0 || loc > 1) p.bad("locality", "must lie in [0, 1]");
           return [=](Report& rep) {
             auto b = bus_split(static_cast<int>(n), m, loc);
             rep.x("saving_pct", b.saving_pct);
             rep.x("m_opt", b.m_opt);
             rep.x("saving_at_opt_pct", b.saving_at_opt_pct);
           };
         }});

  r.add({"gray_code", "power", "bit transitions of a sequence in binary and Gray code",
         {{"sequence", "array", true, "integers"}, {"width", "integer", true, "bits"}},
         [](const Params& p) -> Runner {
           long w = p.integer("width");
           if (w < 1 || w > 63) p.bad("width", "must be in 1..63");
           std::vector<std::uint64_t> seq;
           for (double d : p.nums("sequence")) {
             if (d < 0 || d != std::floor(d) || d >= std::ldexp(1.0, static_cast<int>(w)))
               p.bad("sequence", "entries must be integers that fit the width");
             seq.push_back(static_cast<std::uint64_t>(d));
           }
           return [=](Report& rep) {
             auto g = gray_code(seq, static_cast<int>(w));
             rep.set("binary_transitions", g.binary);
             rep.set("gray_transitions", g.gray);
             rep.set("saved", g.saved);
           };
         }});
}

}  // namespace vk::cases
